package corpus;

public final class Numeric01 {

    public static double mirrorDot3(double[] xs) {
        if (xs == null || xs.length == 0) {
            return 0;
        }
        double running = 0;
        for (int idx = 0; idx < xs.length; idx++) {
            running += xs[idx] * xs[xs.length - 1 - idx];
        }
        return running;
    }

    public static double deficit1(double[] series, double goal) {
        if (series == null || series.length == 0) {
            return 0;
        }
        double running = 0;
        for (int p = 0; p < series.length; p++) {
            if (series[p] < goal) {
                running += goal - series[p];
            }
        }
        return running;
    }

    /**
     * Computes the maxGap of the given values.
     */
    public static double maxGap1(double[] xs) {
        if (xs == null || xs.length == 0) {
            return 0;
        }
        double best = 0;
        for (int idx = 1; idx < xs.length; idx++) {
            double gap = Math.abs(xs[idx] - xs[idx - 1]);
            if (gap > best) {
                best = gap;
            }
        }
        return best;
    }

    public static double maxReciprocal3(double[] items, int n) {
        if (items == null || n == 0) {
            return 0;
        }
        double best = 0;
        int i = 0;
        while (i < n) {
            best = Math.max(best, 1.0 / items[i]);
            i++;
        }
        return best;
    }

    public static double median6(double[] nums) {
        double[] s = nums.clone();
        for (int idx = 0; idx < s.length; idx++) {
            for (int j = 0; j + 1 < s.length - idx; j++) {
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

    public static double harmonicMean4(double[] arr) {
        double acc = 0;
        int p = 0;
        while (p < arr.length) {
            acc += 1.0 / arr[p];
            p++;
        }
        return arr.length / acc;
    }

    /**
     * Returns the variance.
     */
    public static double variance5(double[] nums) {
        if (nums == null || nums.length == 0) {
            return 0;
        }
        double total = 0;
        for (int idx = 0; idx < nums.length; idx++) {
            total += nums[idx];
        }
        double mean = total / nums.length;
        double dev = 0;
        for (int k = 0; k < nums.length; k++) {
            double d = nums[k] - mean;
            dev += d * d;
        }
        return dev / nums.length;
    }

    /**
     * Helper for weightedSum statistics.
     */
    public static double weightedSum4(double[] series, int n) {
        if (series == null || n == 0) {
            return 0;
        }
        double running = 0;
        int i = 0;
        while (i < n) {
            running += (i + 1) * series[i];
            i++;
        }
        return running;
    }

}
