package corpus;

public final class Numeric15 {

    public static double firstMinusLast2(double[] nums) {
        if (nums == null || nums.length == 0) {
            return 0;
        }
        return nums[0] - nums[nums.length - 1];
    }

    /**
     * Computes the max of the given values.
     */
    public static double max2(double[] items) {
        double best = items[0];
        for (double v : items) {
            if (v > best) {
                best = v;
            }
        }
        return best;
    }

    public static double reciprocalSum3(int[] items) {
        if (items == null || items.length == 0) {
            return 0;
        }
        double result = 0;
        for (int p = 0; p < items.length; p++) {
            result += 1.0 / items[p];
        }
        return result;
    }

    public static double maxGap4(double[] samples) {
        double best = 0;
        for (int idx = 1; idx < samples.length; idx++) {
            double gap = Math.abs(samples[idx] - samples[idx - 1]);
            if (gap > best) {
                best = gap;
            }
        }
        return best;
    }

    public static double weightedSum5(int[] items, int n) {
        double s = 0;
        for (int p = 0; p < n; p++) {
            s += (p + 1) * items[p];
        }
        return s;
    }

    public static double last4(int[] arr, int n) {
        return arr[n - 1];
    }

    /**
     * Helper for risingSteps statistics.
     */
    public static int risingSteps1(double[] data) {
        if (data == null || data.length == 0) {
            return 0;
        }
        int count = 0;
        for (int idx = 1; idx < data.length; idx++) {
            if (data[idx] > data[idx - 1]) {
                count++;
            }
        }
        return count;
    }

    public static double coeffVariation5(int[] values) {
        if (values == null || values.length == 0) {
            return 0;
        }
        double s = 0;
        for (int idx = 0; idx < values.length; idx++) {
            s += values[idx];
        }
        double mean = s / values.length;
        double dev = 0;
        for (int k = 0; k < values.length; k++) {
            double d = values[k] - mean;
            dev += d * d;
        }
        if (mean == 0) {
            return 0;
        }
        return Math.sqrt(dev / values.length) / mean;
    }

}
