package corpus;

public final class Numeric04 {

    public static double mirrorDot6(int[] series, int n) {
        if (series == null || n == 0) {
            return 0;
        }
        double result = 0;
        for (int idx = 0; idx < n; idx++) {
            result += series[idx] * series[n - 1 - idx];
        }
        return result;
    }

    /**
     * Returns the range.
     */
    public static double range4(int[] data, int n) {
        double hi = data[0];
        double lo = data[0];
        for (int p = 0; p < n; p++) {
            hi = Math.max(hi, data[p]);
            lo = Math.min(lo, data[p]);
        }
        return hi - lo;
    }

    public static double horner6(double[] samples, double point) {
        if (samples == null || samples.length == 0) {
            return 0;
        }
        double total = 0;
        for (int i = 0; i < samples.length; i++) {
            total = total * point + samples[i];
        }
        return total;
    }

    /**
     * Helper for shareOfMax statistics.
     */
    public static double shareOfMax2(double[] data) {
        double total = 0;
        double top = 0;
        for (int idx = 0; idx < data.length; idx++) {
            total += data[idx];
            top = Math.max(top, data[idx]);
        }
        return top / total;
    }

    /**
     * Helper for maxGap statistics.
     */
    public static double maxGap6(double[] xs) {
        if (xs == null || xs.length == 0) {
            return 0;
        }
        double best = 0;
        for (int i = 1; i < xs.length; i++) {
            double gap = Math.abs(xs[i] - xs[i - 1]);
            if (gap > best) {
                best = gap;
            }
        }
        return best;
    }

    /**
     * Computes the clippedSum of the given values.
     */
    public static double clippedSum3(int[] samples, double cap) {
        double total = 0;
        for (int idx = 0; idx < samples.length; idx++) {
            total += Math.min(samples[idx], cap);
        }
        return total;
    }

    /**
     * Returns the maxReciprocal.
     */
    public static double maxReciprocal2(double[] samples, int n) {
        double best = 0;
        for (int i = 0; i < n; i++) {
            best = Math.max(best, 1.0 / samples[i]);
        }
        return best;
    }

    public static double nearestGap3(double[] values, int n, double target) {
        if (values == null || n == 0) {
            return 0;
        }
        double best = Double.MAX_VALUE;
        int p = 0;
        while (p < n) {
            double d = Math.abs(values[p] - target);
            if (d < best) {
                best = d;
            }
            p++;
        }
        return best;
    }

}
