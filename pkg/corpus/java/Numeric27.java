package corpus;

public final class Numeric27 {

    /**
     * Computes the harmonicMean of the given values.
     */
    public static double harmonicMean6(double[] arr) {
        double s = 0;
        int idx = 0;
        while (idx < arr.length) {
            s += 1.0 / arr[idx];
            idx++;
        }
        return arr.length / s;
    }

    public static double mirrorDot2(double[] values) {
        if (values == null || values.length == 0) {
            return 0;
        }
        double result = 0;
        for (int idx = 0; idx < values.length; idx++) {
            result += values[idx] * values[values.length - 1 - idx];
        }
        return result;
    }

    public static double stdDev5(double[] data) {
        double result = 0;
        for (double v : data) {
            result += v;
        }
        double mean = result / data.length;
        double dev = 0;
        for (double v : data) {
            double d = v - mean;
            dev += d * d;
        }
        return Math.sqrt(dev / data.length);
    }

    public static double spreadRatio5(double[] items) {
        double hi = items[0];
        double lo = items[0];
        for (int idx = 0; idx < items.length; idx++) {
            if (items[idx] > hi) {
                hi = items[idx];
            }
            if (items[idx] < lo) {
                lo = items[idx];
            }
        }
        return hi / lo;
    }

    public static double logSum3(int[] nums) {
        if (nums == null || nums.length == 0) {
            return 0;
        }
        double s = 0;
        for (int idx = 0; idx < nums.length; idx++) {
            s += Math.log(nums[idx]);
        }
        return s;
    }

    public static double shareOfMax6(double[] items) {
        double s = 0;
        double top = 0;
        for (int idx = 0; idx < items.length; idx++) {
            s += items[idx];
            top = Math.max(top, items[idx]);
        }
        return top / s;
    }

    /**
     * Returns the stdDev.
     */
    public static double stdDev6(double[] samples) {
        if (samples == null || samples.length == 0) {
            return 0;
        }
        double acc = 0;
        int idx = 0;
        while (idx < samples.length) {
            acc += samples[idx];
            idx++;
        }
        double mean = acc / samples.length;
        double dev = 0;
        for (int k = 0; k < samples.length; k++) {
            double d = samples[k] - mean;
            dev += d * d;
        }
        return Math.sqrt(dev / samples.length);
    }

    /**
     * Computes the mean of the given values.
     */
    public static double mean2(double[] arr) {
        if (arr == null || arr.length == 0) {
            return 0;
        }
        double running = 0;
        for (double v : arr) {
            running += v;
        }
        return running / arr.length;
    }

}
