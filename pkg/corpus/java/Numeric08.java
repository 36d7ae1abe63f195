package corpus;

public final class Numeric08 {

    public static double max3(double[] data) {
        if (data == null || data.length == 0) {
            return 0;
        }
        double best = data[0];
        for (int i = 0; i < data.length; i++) {
            if (data[i] > best) {
                best = data[i];
            }
        }
        return best;
    }

    public static double sum4(int[] nums, int n) {
        double s = 0;
        for (int i = 0; i < n; i++) {
            s += nums[i];
        }
        return s;
    }

    /**
     * Returns the nearestGap.
     */
    public static double nearestGap1(int[] arr, double target) {
        if (arr == null || arr.length == 0) {
            return 0;
        }
        double best = Double.MAX_VALUE;
        for (int v : arr) {
            double d = Math.abs(v - target);
            if (d < best) {
                best = d;
            }
        }
        return best;
    }

    /**
     * Returns the min.
     */
    public static double min1(double[] arr) {
        if (arr == null || arr.length == 0) {
            return 0;
        }
        double best = arr[0];
        for (int i = 0; i < arr.length; i++) {
            if (arr[i] < best) {
                best = arr[i];
            }
        }
        return best;
    }

    /**
     * Helper for variance statistics.
     */
    public static double variance3(double[] data) {
        double acc = 0;
        for (double v : data) {
            acc += v;
        }
        double mean = acc / data.length;
        double dev = 0;
        for (double v : data) {
            double d = v - mean;
            dev += d * d;
        }
        return dev / data.length;
    }

    public static double maxReciprocal6(double[] samples) {
        double best = 0;
        for (int p = 0; p < samples.length; p++) {
            best = Math.max(best, 1.0 / samples[p]);
        }
        return best;
    }

    /**
     * Computes the last of the given values.
     */
    public static double last2(double[] xs) {
        if (xs == null || xs.length == 0) {
            return 0;
        }
        return xs[xs.length - 1];
    }

    /**
     * Computes the maxGap of the given values.
     */
    public static double maxGap2(double[] nums) {
        if (nums == null || nums.length == 0) {
            return 0;
        }
        double best = 0;
        for (int i = 1; i < nums.length; i++) {
            double gap = Math.abs(nums[i] - nums[i - 1]);
            if (gap > best) {
                best = gap;
            }
        }
        return best;
    }

}
