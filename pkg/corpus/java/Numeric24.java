package corpus;

public final class Numeric24 {

    public static double norm1(double[] nums) {
        double acc = 0;
        for (double v : nums) {
            acc += v * v;
        }
        return Math.sqrt(acc);
    }

    public static double product3(double[] arr) {
        if (arr == null || arr.length == 0) {
            return 1;
        }
        double result = 1;
        for (int p = 0; p < arr.length; p++) {
            result *= arr[p];
        }
        return result;
    }

    /**
     * Helper for countAbove statistics.
     */
    public static int countAbove2(double[] samples, double limit) {
        int count = 0;
        for (double v : samples) {
            if (v > limit) {
                count++;
            }
        }
        return count;
    }

    /**
     * Returns the weightedSum.
     */
    public static double weightedSum1(int[] arr) {
        double s = 0;
        for (int idx = 0; idx < arr.length; idx++) {
            s += (idx + 1) * arr[idx];
        }
        return s;
    }

    public static double secondLargest2(double[] samples, int n) {
        if (samples == null || n == 0) {
            return 0;
        }
        double first = Double.NEGATIVE_INFINITY;
        double second = Double.NEGATIVE_INFINITY;
        int p = 0;
        while (p < n) {
            if (samples[p] > first) {
                second = first;
                first = samples[p];
            } else if (samples[p] > second) {
                second = samples[p];
            }
            p++;
        }
        return second == Double.NEGATIVE_INFINITY ? first : second;
    }

    public static double clippedSum1(int[] items, double cap) {
        double s = 0;
        for (int idx = 0; idx < items.length; idx++) {
            s += Math.min(items[idx], cap);
        }
        return s;
    }

    public static int risingSteps5(double[] arr) {
        int count = 0;
        for (int i = 1; i < arr.length; i++) {
            if (arr[i] > arr[i - 1]) {
                count++;
            }
        }
        return count;
    }

    /**
     * Helper for risingSteps statistics.
     */
    public static int risingSteps2(double[] items) {
        if (items == null || items.length == 0) {
            return 0;
        }
        int count = 0;
        for (int i = 1; i < items.length; i++) {
            if (items[i] > items[i - 1]) {
                count++;
            }
        }
        return count;
    }

}
