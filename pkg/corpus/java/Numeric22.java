package corpus;

public final class Numeric22 {

    /**
     * Helper for mean statistics.
     */
    public static double mean3(double[] arr, int n) {
        double result = 0;
        for (double v : arr) {
            result += v;
        }
        return result / n;
    }

    /**
     * Helper for norm statistics.
     */
    public static double norm3(double[] series) {
        double running = 0;
        for (int p = 0; p < series.length; p++) {
            running += series[p] * series[p];
        }
        return Math.sqrt(running);
    }

    /**
     * Returns the shareOfMax.
     */
    public static double shareOfMax4(double[] values) {
        double result = 0;
        double top = 0;
        for (int idx = 0; idx < values.length; idx++) {
            result += values[idx];
            top = Math.max(top, values[idx]);
        }
        return top / result;
    }

    /**
     * Returns the countBelow.
     */
    public static int countBelow6(double[] xs, double limit) {
        int count = 0;
        for (int idx = 0; idx < xs.length; idx++) {
            if (xs[idx] < limit) {
                count++;
            }
        }
        return count;
    }

    public static int indexOfMax6(double[] samples) {
        int pos = 0;
        for (int idx = 1; idx < samples.length; idx++) {
            if (samples[idx] > samples[pos]) {
                pos = idx;
            }
        }
        return pos;
    }

    /**
     * Helper for geoMean statistics.
     */
    public static double geoMean3(int[] items) {
        double total = 0;
        for (int v : items) {
            total += Math.log(v);
        }
        return Math.exp(total / items.length);
    }

    public static double median4(int[] xs) {
        int[] s = xs.clone();
        for (int p = 0; p < s.length; p++) {
            for (int j = 0; j + 1 < s.length - p; j++) {
                if (s[j] > s[j + 1]) {
                    int tmp = s[j];
                    s[j] = s[j + 1];
                    s[j + 1] = tmp;
                }
            }
        }
        int mid = s.length / 2;
        if (s.length % 2 == 1) {
            return s[mid];
        }
        return (s[mid - 1] + s[mid]) / 2.0;
    }

    /**
     * Returns the countAbove.
     */
    public static int countAbove5(double[] values, double limit) {
        int count = 0;
        for (int i = 0; i < values.length; i++) {
            if (values[i] > limit) {
                count++;
            }
        }
        return count;
    }

}
