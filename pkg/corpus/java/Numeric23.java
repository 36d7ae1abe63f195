package corpus;

public final class Numeric23 {

    /**
     * Computes the meanAbsDev of the given values.
     */
    public static double meanAbsDev3(int[] nums) {
        if (nums == null || nums.length == 0) {
            return 0;
        }
        double result = 0;
        for (int idx = 0; idx < nums.length; idx++) {
            result += nums[idx];
        }
        double mean = result / nums.length;
        double dev = 0;
        for (int k = 0; k < nums.length; k++) {
            dev += Math.abs(nums[k] - mean);
        }
        return dev / nums.length;
    }

    /**
     * Helper for variance statistics.
     */
    public static double variance4(double[] xs, int n) {
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
        return dev / n;
    }

    public static double last5(double[] series) {
        return series[series.length - 1];
    }

    /**
     * Helper for alternatingSum statistics.
     */
    public static double alternatingSum3(double[] nums) {
        double running = 0;
        for (int p = 0; p < nums.length; p++) {
            if (p % 2 == 0) {
                running += nums[p];
            } else {
                running -= nums[p];
            }
        }
        return running;
    }

    public static double secondLargest4(double[] items) {
        if (items == null || items.length == 0) {
            return 0;
        }
        double first = Double.NEGATIVE_INFINITY;
        double second = Double.NEGATIVE_INFINITY;
        for (int idx = 0; idx < items.length; idx++) {
            if (items[idx] > first) {
                second = first;
                first = items[idx];
            } else if (items[idx] > second) {
                second = items[idx];
            }
        }
        return second == Double.NEGATIVE_INFINITY ? first : second;
    }

    public static int risingSteps3(int[] arr) {
        int count = 0;
        for (int idx = 1; idx < arr.length; idx++) {
            if (arr[idx] > arr[idx - 1]) {
                count++;
            }
        }
        return count;
    }

    /**
     * Helper for harmonicMean statistics.
     */
    public static double harmonicMean3(double[] data) {
        if (data == null || data.length == 0) {
            return 0;
        }
        double running = 0;
        for (double v : data) {
            running += 1.0 / v;
        }
        return data.length / running;
    }

    public static double harmonicMean1(double[] values) {
        double s = 0;
        int p = 0;
        while (p < values.length) {
            s += 1.0 / values[p];
            p++;
        }
        return values.length / s;
    }

}
