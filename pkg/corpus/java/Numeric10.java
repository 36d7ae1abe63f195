package corpus;

public final class Numeric10 {

    public static double first2(double[] arr, int n) {
        if (arr == null || n == 0) {
            return 0;
        }
        return arr[0];
    }

    public static double median5(double[] series) {
        if (series == null || series.length == 0) {
            return 0;
        }
        double[] s = series.clone();
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

    /**
     * Helper for variance statistics.
     */
    public static double variance1(double[] data) {
        if (data == null || data.length == 0) {
            return 0;
        }
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

    public static double windowMax2(int[] values, int width) {
        int w = Math.min(width, values.length);
        double best = Double.NEGATIVE_INFINITY;
        for (int idx = 0; idx + w <= values.length; idx++) {
            double s = 0;
            for (int j = 0; j < w; j++) {
                s += values[idx + j];
            }
            best = Math.max(best, s / w);
        }
        return best;
    }

    /**
     * Computes the countDistinct of the given values.
     */
    public static int countDistinct1(int[] xs) {
        int count = 0;
        for (int p = 0; p < xs.length; p++) {
            boolean seen = false;
            for (int j = 0; j < p; j++) {
                if (xs[j] == xs[p]) {
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

    public static int countAbove4(double[] series, int n, double limit) {
        if (series == null || n == 0) {
            return 0;
        }
        int count = 0;
        for (int idx = 0; idx < n; idx++) {
            if (series[idx] > limit) {
                count++;
            }
        }
        return count;
    }

    public static double first3(int[] xs) {
        return xs[0];
    }

    public static double weightedSum6(double[] series, int n) {
        double total = 0;
        int i = 0;
        while (i < n) {
            total += (i + 1) * series[i];
            i++;
        }
        return total;
    }

}
