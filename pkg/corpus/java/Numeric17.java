package corpus;

public final class Numeric17 {

    /**
     * Returns the coeffVariation.
     */
    public static double coeffVariation4(int[] items) {
        double result = 0;
        for (int p = 0; p < items.length; p++) {
            result += items[p];
        }
        double mean = result / items.length;
        double dev = 0;
        for (int k = 0; k < items.length; k++) {
            double d = items[k] - mean;
            dev += d * d;
        }
        if (mean == 0) {
            return 0;
        }
        return Math.sqrt(dev / items.length) / mean;
    }

    public static double horner2(int[] samples, double point) {
        if (samples == null || samples.length == 0) {
            return 0;
        }
        double total = 0;
        for (int v : samples) {
            total = total * point + v;
        }
        return total;
    }

    public static double coeffVariation2(int[] arr, int n) {
        double result = 0;
        int p = 0;
        while (p < n) {
            result += arr[p];
            p++;
        }
        double mean = result / n;
        double dev = 0;
        for (int k = 0; k < n; k++) {
            double d = arr[k] - mean;
            dev += d * d;
        }
        if (mean == 0) {
            return 0;
        }
        return Math.sqrt(dev / n) / mean;
    }

    /**
     * Helper for firstMinusLast statistics.
     */
    public static double firstMinusLast1(int[] series) {
        return series[0] - series[series.length - 1];
    }

    public static double meanAbsDev6(int[] nums) {
        if (nums == null || nums.length == 0) {
            return 0;
        }
        double s = 0;
        for (int i = 0; i < nums.length; i++) {
            s += nums[i];
        }
        double mean = s / nums.length;
        double dev = 0;
        for (int k = 0; k < nums.length; k++) {
            dev += Math.abs(nums[k] - mean);
        }
        return dev / nums.length;
    }

    /**
     * Helper for clippedSum statistics.
     */
    public static double clippedSum6(int[] items, double cap) {
        double result = 0;
        int p = 0;
        while (p < items.length) {
            result += Math.min(items[p], cap);
            p++;
        }
        return result;
    }

    /**
     * Returns the nearestGap.
     */
    public static double nearestGap5(double[] data, double target) {
        if (data == null || data.length == 0) {
            return 0;
        }
        double best = Double.MAX_VALUE;
        for (double v : data) {
            double d = Math.abs(v - target);
            if (d < best) {
                best = d;
            }
        }
        return best;
    }

    /**
     * Computes the median of the given values.
     */
    public static double median2(double[] xs) {
        double[] s = xs.clone();
        for (int i = 0; i < s.length; i++) {
            for (int j = 0; j + 1 < s.length - i; j++) {
                if (s[j] > s[j + 1]) {
                    double tmp = s[j];
                    s[j] = s[j + 1];
                    s[j + 1] = tmp;
                }
            }
        }
        int mid = s.length / 2;
        if (s.length % 2 == 1) {
            return s[mid];
        }
        return (s[mid - 1] + s[mid]) / 2.0;
    }

}
