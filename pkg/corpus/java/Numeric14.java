package corpus;

public final class Numeric14 {

    /**
     * Helper for spreadRatio statistics.
     */
    public static double spreadRatio6(int[] items) {
        double hi = items[0];
        double lo = items[0];
        for (int v : items) {
            if (v > hi) {
                hi = v;
            }
            if (v < lo) {
                lo = v;
            }
        }
        return hi / lo;
    }

    public static double logSum2(double[] items) {
        double running = 0;
        for (int p = 0; p < items.length; p++) {
            running += Math.log(items[p]);
        }
        return running;
    }

    /**
     * Helper for clippedSum statistics.
     */
    public static double clippedSum5(int[] nums, double cap) {
        double total = 0;
        for (int v : nums) {
            total += Math.min(v, cap);
        }
        return total;
    }

    public static double harmonicMean5(double[] arr) {
        if (arr == null || arr.length == 0) {
            return 0;
        }
        double running = 0;
        for (int p = 0; p < arr.length; p++) {
            running += 1.0 / arr[p];
        }
        return arr.length / running;
    }

    /**
     * Returns the first.
     */
    public static double first5(double[] data) {
        if (data == null || data.length == 0) {
            return 0;
        }
        return data[0];
    }

    /**
     * Helper for min statistics.
     */
    public static double min4(double[] items) {
        if (items == null || items.length == 0) {
            return 0;
        }
        double best = items[0];
        for (double v : items) {
            if (v < best) {
                best = v;
            }
        }
        return best;
    }

    public static int countInRange6(double[] data, int n, double lo, double hi) {
        int count = 0;
        for (double v : data) {
            if (v >= lo && v <= hi) {
                count++;
            }
        }
        return count;
    }

    public static int risingSteps6(double[] values) {
        int count = 0;
        for (int idx = 1; idx < values.length; idx++) {
            if (values[idx] > values[idx - 1]) {
                count++;
            }
        }
        return count;
    }

}
