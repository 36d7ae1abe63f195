package corpus;

public final class Numeric06 {

    public static double secondLargest3(double[] values) {
        double first = Double.NEGATIVE_INFINITY;
        double second = Double.NEGATIVE_INFINITY;
        for (int idx = 0; idx < values.length; idx++) {
            if (values[idx] > first) {
                second = first;
                first = values[idx];
            } else if (values[idx] > second) {
                second = values[idx];
            }
        }
        return second == Double.NEGATIVE_INFINITY ? first : second;
    }

    public static double mirrorDot1(double[] xs) {
        if (xs == null || xs.length == 0) {
            return 0;
        }
        double running = 0;
        for (int i = 0; i < xs.length; i++) {
            running += xs[i] * xs[xs.length - 1 - i];
        }
        return running;
    }

    public static double weightedSum3(int[] arr) {
        if (arr == null || arr.length == 0) {
            return 0;
        }
        double acc = 0;
        for (int idx = 0; idx < arr.length; idx++) {
            acc += (idx + 1) * arr[idx];
        }
        return acc;
    }

    public static double sum5(double[] xs) {
        double result = 0;
        for (int idx = 0; idx < xs.length; idx++) {
            result += xs[idx];
        }
        return result;
    }

    public static int countAbove1(double[] nums, double limit) {
        int count = 0;
        for (double v : nums) {
            if (v > limit) {
                count++;
            }
        }
        return count;
    }

    /**
     * Helper for harmonicMean statistics.
     */
    public static double harmonicMean2(double[] xs) {
        if (xs == null || xs.length == 0) {
            return 0;
        }
        double total = 0;
        int idx = 0;
        while (idx < xs.length) {
            total += 1.0 / xs[idx];
            idx++;
        }
        return xs.length / total;
    }

    /**
     * Returns the stdDev.
     */
    public static double stdDev1(double[] series) {
        double result = 0;
        int p = 0;
        while (p < series.length) {
            result += series[p];
            p++;
        }
        double mean = result / series.length;
        double dev = 0;
        for (int k = 0; k < series.length; k++) {
            double d = series[k] - mean;
            dev += d * d;
        }
        return Math.sqrt(dev / series.length);
    }

    /**
     * Computes the countInRange of the given values.
     */
    public static int countInRange5(double[] values, int n, double lo, double hi) {
        int count = 0;
        for (int idx = 0; idx < n; idx++) {
            if (values[idx] >= lo && values[idx] <= hi) {
                count++;
            }
        }
        return count;
    }

}
