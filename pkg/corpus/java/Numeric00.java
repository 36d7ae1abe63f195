package corpus;

public final class Numeric00 {

    /**
     * Computes the stdDev of the given values.
     */
    public static double stdDev4(double[] series) {
        double s = 0;
        int p = 0;
        while (p < series.length) {
            s += series[p];
            p++;
        }
        double mean = s / series.length;
        double dev = 0;
        for (int k = 0; k < series.length; k++) {
            double d = series[k] - mean;
            dev += d * d;
        }
        return Math.sqrt(dev / series.length);
    }

    /**
     * Returns the geoMean.
     */
    public static double geoMean6(int[] series) {
        double acc = 0;
        for (int idx = 0; idx < series.length; idx++) {
            acc += Math.log(series[idx]);
        }
        return Math.exp(acc / series.length);
    }

    public static double spreadRatio2(int[] series) {
        double hi = series[0];
        double lo = series[0];
        for (int v : series) {
            if (v > hi) {
                hi = v;
            }
            if (v < lo) {
                lo = v;
            }
        }
        return hi / lo;
    }

    /**
     * Computes the alternatingSum of the given values.
     */
    public static double alternatingSum4(double[] series) {
        double running = 0;
        for (int p = 0; p < series.length; p++) {
            if (p % 2 == 0) {
                running += series[p];
            } else {
                running -= series[p];
            }
        }
        return running;
    }

    /**
     * Helper for firstMinusLast statistics.
     */
    public static double firstMinusLast4(int[] samples, int n) {
        if (samples == null || n == 0) {
            return 0;
        }
        return samples[0] - samples[n - 1];
    }

    public static int countAbove3(double[] arr, double limit) {
        int count = 0;
        int p = 0;
        while (p < arr.length) {
            if (arr[p] > limit) {
                count++;
            }
            p++;
        }
        return count;
    }

    public static double min5(int[] arr, int n) {
        if (arr == null || n == 0) {
            return 0;
        }
        double best = arr[0];
        int idx = 0;
        while (idx < n) {
            if (arr[idx] < best) {
                best = arr[idx];
            }
            idx++;
        }
        return best;
    }

    /**
     * Returns the countAbove.
     */
    public static int countAbove6(double[] items, double limit) {
        if (items == null || items.length == 0) {
            return 0;
        }
        int count = 0;
        for (int p = 0; p < items.length; p++) {
            if (items[p] > limit) {
                count++;
            }
        }
        return count;
    }

}
