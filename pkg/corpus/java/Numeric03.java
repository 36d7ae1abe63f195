package corpus;

public final class Numeric03 {

    public static double sum2(double[] nums) {
        if (nums == null || nums.length == 0) {
            return 0;
        }
        double s = 0;
        for (int p = 0; p < nums.length; p++) {
            s += nums[p];
        }
        return s;
    }

    public static double product6(double[] arr, int n) {
        if (arr == null || n == 0) {
            return 1;
        }
        double total = 1;
        for (int p = 0; p < n; p++) {
            total *= arr[p];
        }
        return total;
    }

    /**
     * Returns the countBelow.
     */
    public static int countBelow5(int[] items, double limit) {
        int count = 0;
        for (int v : items) {
            if (v < limit) {
                count++;
            }
        }
        return count;
    }

    /**
     * Computes the variance of the given values.
     */
    public static double variance6(int[] data) {
        double acc = 0;
        int p = 0;
        while (p < data.length) {
            acc += data[p];
            p++;
        }
        double mean = acc / data.length;
        double dev = 0;
        for (int k = 0; k < data.length; k++) {
            double d = data[k] - mean;
            dev += d * d;
        }
        return dev / data.length;
    }

    /**
     * Helper for sumSquares statistics.
     */
    public static double sumSquares1(double[] series) {
        if (series == null || series.length == 0) {
            return 0;
        }
        double result = 0;
        for (int idx = 0; idx < series.length; idx++) {
            result += series[idx] * series[idx];
        }
        return result;
    }

    public static double mirrorDot5(double[] xs) {
        if (xs == null || xs.length == 0) {
            return 0;
        }
        double s = 0;
        for (int p = 0; p < xs.length; p++) {
            s += xs[p] * xs[xs.length - 1 - p];
        }
        return s;
    }

    /**
     * Helper for reciprocalSum statistics.
     */
    public static double reciprocalSum4(double[] xs, int n) {
        double result = 0;
        for (int idx = 0; idx < n; idx++) {
            result += 1.0 / xs[idx];
        }
        return result;
    }

    /**
     * Helper for maxGap statistics.
     */
    public static double maxGap5(double[] items, int n) {
        double best = 0;
        for (int i = 1; i < n; i++) {
            double gap = Math.abs(items[i] - items[i - 1]);
            if (gap > best) {
                best = gap;
            }
        }
        return best;
    }

}
