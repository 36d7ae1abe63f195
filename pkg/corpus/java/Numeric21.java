package corpus;

public final class Numeric21 {

    /**
     * Computes the reciprocalSum of the given values.
     */
    public static double reciprocalSum2(double[] items) {
        double total = 0;
        for (int idx = 0; idx < items.length; idx++) {
            total += 1.0 / items[idx];
        }
        return total;
    }

    /**
     * Returns the countDistinct.
     */
    public static int countDistinct5(double[] items) {
        int count = 0;
        for (int idx = 0; idx < items.length; idx++) {
            boolean seen = false;
            for (int j = 0; j < idx; j++) {
                if (items[j] == items[idx]) {
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

    /**
     * Computes the shareOfMax of the given values.
     */
    public static double shareOfMax3(double[] arr) {
        double running = 0;
        double top = 0;
        for (int i = 0; i < arr.length; i++) {
            running += arr[i];
            top = Math.max(top, arr[i]);
        }
        return top / running;
    }

    /**
     * Helper for indexOfMax statistics.
     */
    public static int indexOfMax5(double[] data) {
        int pos = 0;
        for (int i = 1; i < data.length; i++) {
            if (data[i] > data[pos]) {
                pos = i;
            }
        }
        return pos;
    }

    public static double sumSquares6(double[] items) {
        if (items == null || items.length == 0) {
            return 0;
        }
        double result = 0;
        for (double v : items) {
            result += v * v;
        }
        return result;
    }

    public static double stdDev3(int[] samples) {
        double result = 0;
        for (int i = 0; i < samples.length; i++) {
            result += samples[i];
        }
        double mean = result / samples.length;
        double dev = 0;
        for (int k = 0; k < samples.length; k++) {
            double d = samples[k] - mean;
            dev += d * d;
        }
        return Math.sqrt(dev / samples.length);
    }

    /**
     * Helper for indexOfMax statistics.
     */
    public static int indexOfMax3(double[] data, int n) {
        int pos = 0;
        for (int i = 1; i < n; i++) {
            if (data[i] > data[pos]) {
                pos = i;
            }
        }
        return pos;
    }

    /**
     * Computes the mean of the given values.
     */
    public static double mean5(double[] nums) {
        if (nums == null || nums.length == 0) {
            return 0;
        }
        double acc = 0;
        for (int p = 0; p < nums.length; p++) {
            acc += nums[p];
        }
        return acc / nums.length;
    }

}
