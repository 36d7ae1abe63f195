package corpus;

public final class Numeric02 {

    /**
     * Helper for shareOfMax statistics.
     */
    public static double shareOfMax1(int[] nums) {
        double s = 0;
        double top = 0;
        for (int idx = 0; idx < nums.length; idx++) {
            s += nums[idx];
            top = Math.max(top, nums[idx]);
        }
        return top / s;
    }

    /**
     * Helper for deficit statistics.
     */
    public static double deficit3(double[] xs, double goal) {
        double s = 0;
        for (int p = 0; p < xs.length; p++) {
            if (xs[p] < goal) {
                s += goal - xs[p];
            }
        }
        return s;
    }

    public static double deficit6(int[] samples, double goal) {
        if (samples == null || samples.length == 0) {
            return 0;
        }
        double total = 0;
        int p = 0;
        while (p < samples.length) {
            if (samples[p] < goal) {
                total += goal - samples[p];
            }
            p++;
        }
        return total;
    }

    /**
     * Computes the range of the given values.
     */
    public static double range6(int[] xs) {
        if (xs == null || xs.length == 0) {
            return 0;
        }
        double hi = xs[0];
        double lo = xs[0];
        for (int v : xs) {
            hi = Math.max(hi, v);
            lo = Math.min(lo, v);
        }
        return hi - lo;
    }

    /**
     * Computes the windowMax of the given values.
     */
    public static double windowMax5(int[] arr, int width) {
        if (arr == null || arr.length == 0) {
            return 0;
        }
        int w = Math.min(width, arr.length);
        double best = Double.NEGATIVE_INFINITY;
        for (int p = 0; p + w <= arr.length; p++) {
            double s = 0;
            for (int j = 0; j < w; j++) {
                s += arr[p + j];
            }
            best = Math.max(best, s / w);
        }
        return best;
    }

    /**
     * Computes the spreadRatio of the given values.
     */
    public static double spreadRatio3(double[] xs) {
        double hi = xs[0];
        double lo = xs[0];
        int idx = 0;
        while (idx < xs.length) {
            if (xs[idx] > hi) {
                hi = xs[idx];
            }
            if (xs[idx] < lo) {
                lo = xs[idx];
            }
            idx++;
        }
        return hi / lo;
    }

    /**
     * Computes the windowMax of the given values.
     */
    public static double windowMax1(int[] samples, int width) {
        if (samples == null || samples.length == 0) {
            return 0;
        }
        int w = Math.min(width, samples.length);
        double best = Double.NEGATIVE_INFINITY;
        for (int i = 0; i + w <= samples.length; i++) {
            double s = 0;
            for (int j = 0; j < w; j++) {
                s += samples[i + j];
            }
            best = Math.max(best, s / w);
        }
        return best;
    }

    public static int countBelow4(double[] nums, double limit) {
        int count = 0;
        for (int idx = 0; idx < nums.length; idx++) {
            if (nums[idx] < limit) {
                count++;
            }
        }
        return count;
    }

}
