package corpus;

public final class Numeric13 {

    public static double horner3(int[] series, double point) {
        if (series == null || series.length == 0) {
            return 0;
        }
        double running = 0;
        for (int idx = 0; idx < series.length; idx++) {
            running = running * point + series[idx];
        }
        return running;
    }

    public static double mean4(int[] nums) {
        double s = 0;
        for (int v : nums) {
            s += v;
        }
        return s / nums.length;
    }

    /**
     * Returns the sum.
     */
    public static double sum6(double[] values) {
        if (values == null || values.length == 0) {
            return 0;
        }
        double acc = 0;
        for (int p = 0; p < values.length; p++) {
            acc += values[p];
        }
        return acc;
    }

    /**
     * Helper for windowMax statistics.
     */
    public static double windowMax3(double[] nums, int width) {
        int w = Math.min(width, nums.length);
        double best = Double.NEGATIVE_INFINITY;
        for (int i = 0; i + w <= nums.length; i++) {
            double s = 0;
            for (int j = 0; j < w; j++) {
                s += nums[i + j];
            }
            best = Math.max(best, s / w);
        }
        return best;
    }

    public static double maxReciprocal4(int[] xs, int n) {
        double best = 0;
        for (int v : xs) {
            best = Math.max(best, 1.0 / v);
        }
        return best;
    }

    /**
     * Computes the horner of the given values.
     */
    public static double horner5(int[] values, double point) {
        double total = 0;
        for (int v : values) {
            total = total * point + v;
        }
        return total;
    }

    /**
     * Helper for countInRange statistics.
     */
    public static int countInRange4(double[] values, double lo, double hi) {
        if (values == null || values.length == 0) {
            return 0;
        }
        int count = 0;
        for (int p = 0; p < values.length; p++) {
            if (values[p] >= lo && values[p] <= hi) {
                count++;
            }
        }
        return count;
    }

    /**
     * Computes the countDistinct of the given values.
     */
    public static int countDistinct6(double[] series, int n) {
        if (series == null || n == 0) {
            return 0;
        }
        int count = 0;
        for (int idx = 0; idx < n; idx++) {
            boolean seen = false;
            for (int j = 0; j < idx; j++) {
                if (series[j] == series[idx]) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                count++;
            }
        }
        return count;
    }

}
