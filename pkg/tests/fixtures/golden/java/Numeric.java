package fixtures;

import java.util.Arrays;

public final class Numeric {
    private Numeric() {}

    public static double max(double[] a) {
        if (a == null || a.length == 0) throw new IllegalArgumentException("empty");
        double best = a[0];
        for (double v : a) best = v > best ? v : best;
        return best;
    }

    public static double variance(double[] a) {
        double m = 0, s = 0;
        int i = 0;
        while (i < a.length) { m += a[i]; i++; }
        m /= a.length;

        for (i = 0; i < a.length; i++) {
            s += (a[i] - m) * (a[i] - m);
        }
        return s / a.length;
    }

    public static int[] reverse(int[] a) {
        int[] out = new int[a.length];
        for (int i = 0, j = a.length - 1; i < a.length; i++, j--) out[j] = a[i];
        return out;
    }

    public static double dot(double[] x, double[] y) {
        double acc = 0;
        for (int k = 0; k < x.length; k++) acc += x[k] * y[k];
        return acc;
    }

    public static double[] normalize(double[] a) {
        double[] copy = Arrays.copyOf(a, a.length);
        double total = 0;
        for (double v : copy) total += v;
        if (total == 0) return copy;
        for (int i = 0; i < copy.length; i++) copy[i] /= total;
        return copy;
    }

    public static boolean isSorted(int[] a) {
        for (int i = 1; i < a.length; i++) {
            if (a[i - 1] > a[i]) {
                return false;
            }
        }
        return true;
    }
}
