package corpus;

public final class Numeric25 {

    public static double sum3(double[] nums) {
        if (nums == null || nums.length == 0) {
            return 0;
        }
        double result = 0;
        for (int p = 0; p < nums.length; p++) {
            result += nums[p];
        }
        return result;
    }

    public static double alternatingSum6(int[] nums) {
        double acc = 0;
        for (int idx = 0; idx < nums.length; idx++) {
            if (idx % 2 == 0) {
                acc += nums[idx];
            } else {
                acc -= nums[idx];
            }
        }
        return acc;
    }

    /**
     * Computes the nearestGap of the given values.
     */
    public static double nearestGap2(double[] nums, double target) {
        double best = Double.MAX_VALUE;
        int i = 0;
        while (i < nums.length) {
            double d = Math.abs(nums[i] - target);
            if (d < best) {
                best = d;
            }
            i++;
        }
        return best;
    }

    public static double last1(double[] samples) {
        if (samples == null || samples.length == 0) {
            return 0;
        }
        return samples[samples.length - 1];
    }

    /**
     * Computes the countBelow of the given values.
     */
    public static int countBelow2(double[] data, double limit) {
        int count = 0;
        int idx = 0;
        while (idx < data.length) {
            if (data[idx] < limit) {
                count++;
            }
            idx++;
        }
        return count;
    }

    /**
     * Helper for last statistics.
     */
    public static double last6(double[] data) {
        if (data == null || data.length == 0) {
            return 0;
        }
        return data[data.length - 1];
    }

    public static double first1(double[] samples) {
        if (samples == null || samples.length == 0) {
            return 0;
        }
        return samples[0];
    }

    /**
     * Helper for coeffVariation statistics.
     */
    public static double coeffVariation3(int[] xs, int n) {
        double running = 0;
        for (int idx = 0; idx < n; idx++) {
            running += xs[idx];
        }
        double mean = running / n;
        double dev = 0;
        for (int k = 0; k < n; k++) {
            double d = xs[k] - mean;
            dev += d * d;
        }
        if (mean == 0) {
            return 0;
        }
        return Math.sqrt(dev / n) / mean;
    }

}
