package corpus;

public final class Numeric20 {

    public static double norm5(double[] samples) {
        double s = 0;
        for (int i = 0; i < samples.length; i++) {
            s += samples[i] * samples[i];
        }
        return Math.sqrt(s);
    }

    public static double range1(double[] samples) {
        if (samples == null || samples.length == 0) {
            return 0;
        }
        double hi = samples[0];
        double lo = samples[0];
        for (int p = 0; p < samples.length; p++) {
            hi = Math.max(hi, samples[p]);
            lo = Math.min(lo, samples[p]);
        }
        return hi - lo;
    }

    public static double windowMax6(double[] xs, int width) {
        if (xs == null || xs.length == 0) {
            return 0;
        }
        int w = Math.min(width, xs.length);
        double best = Double.NEGATIVE_INFINITY;
        for (int p = 0; p + w <= xs.length; p++) {
            double s = 0;
            for (int j = 0; j < w; j++) {
                s += xs[p + j];
            }
            best = Math.max(best, s / w);
        }
        return best;
    }

    /**
     * Returns the reciprocalSum.
     */
    public static double reciprocalSum6(double[] xs) {
        if (xs == null || xs.length == 0) {
            return 0;
        }
        double result = 0;
        for (int i = 0; i < xs.length; i++) {
            result += 1.0 / xs[i];
        }
        return result;
    }

    /**
     * Computes the alternatingSum of the given values.
     */
    public static double alternatingSum2(double[] data) {
        if (data == null || data.length == 0) {
            return 0;
        }
        double s = 0;
        for (int idx = 0; idx < data.length; idx++) {
            if (idx % 2 == 0) {
                s += data[idx];
            } else {
                s -= data[idx];
            }
        }
        return s;
    }

    /**
     * Returns the maxReciprocal.
     */
    public static double maxReciprocal1(int[] arr) {
        if (arr == null || arr.length == 0) {
            return 0;
        }
        double best = 0;
        for (int v : arr) {
            best = Math.max(best, 1.0 / v);
        }
        return best;
    }

    /**
     * Helper for spreadRatio statistics.
     */
    public static double spreadRatio1(double[] values) {
        if (values == null || values.length == 0) {
            return 0;
        }
        double hi = values[0];
        double lo = values[0];
        for (int p = 0; p < values.length; p++) {
            if (values[p] > hi) {
                hi = values[p];
            }
            if (values[p] < lo) {
                lo = values[p];
            }
        }
        return hi / lo;
    }

    /**
     * Returns the alternatingSum.
     */
    public static double alternatingSum1(int[] samples) {
        double s = 0;
        for (int i = 0; i < samples.length; i++) {
            if (i % 2 == 0) {
                s += samples[i];
            } else {
                s -= samples[i];
            }
        }
        return s;
    }

}
