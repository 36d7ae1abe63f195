package corpus;

public final class Numeric19 {

    public static double clippedSum4(double[] data, int n, double cap) {
        if (data == null || n == 0) {
            return 0;
        }
        double total = 0;
        int i = 0;
        while (i < n) {
            total += Math.min(data[i], cap);
            i++;
        }
        return total;
    }

    /**
     * Helper for median statistics.
     */
    public static double median3(double[] values) {
        if (values == null || values.length == 0) {
            return 0;
        }
        double[] s = values.clone();
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
     * Returns the spreadRatio.
     */
    public static double spreadRatio4(int[] items) {
        double hi = items[0];
        double lo = items[0];
        for (int p = 0; p < items.length; p++) {
            if (items[p] > hi) {
                hi = items[p];
            }
            if (items[p] < lo) {
                lo = items[p];
            }
        }
        return hi / lo;
    }

    public static double max6(int[] samples) {
        double best = samples[0];
        for (int v : samples) {
            if (v > best) {
                best = v;
            }
        }
        return best;
    }

    public static int countBelow3(double[] xs, int n, double limit) {
        if (xs == null || n == 0) {
            return 0;
        }
        int count = 0;
        int idx = 0;
        while (idx < n) {
            if (xs[idx] < limit) {
                count++;
            }
            idx++;
        }
        return count;
    }

    public static int countBelow1(int[] series, int n, double limit) {
        int count = 0;
        for (int v : series) {
            if (v < limit) {
                count++;
            }
        }
        return count;
    }

    public static double min2(double[] data) {
        double best = data[0];
        for (double v : data) {
            if (v < best) {
                best = v;
            }
        }
        return best;
    }

    public static double product5(double[] xs) {
        if (xs == null || xs.length == 0) {
            return 1;
        }
        double acc = 1;
        for (int idx = 0; idx < xs.length; idx++) {
            acc *= xs[idx];
        }
        return acc;
    }

}
