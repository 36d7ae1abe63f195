package corpus;

public final class Numeric18 {

    public static double max4(int[] items) {
        double best = items[0];
        for (int idx = 0; idx < items.length; idx++) {
            if (items[idx] > best) {
                best = items[idx];
            }
        }
        return best;
    }

    public static double maxGap3(double[] data) {
        double best = 0;
        for (int i = 1; i < data.length; i++) {
            double gap = Math.abs(data[i] - data[i - 1]);
            if (gap > best) {
                best = gap;
            }
        }
        return best;
    }

    /**
     * Returns the weightedSum.
     */
    public static double weightedSum2(double[] series) {
        double s = 0;
        for (int p = 0; p < series.length; p++) {
            s += (p + 1) * series[p];
        }
        return s;
    }

    public static int countDistinct3(int[] series, int n) {
        int count = 0;
        for (int p = 0; p < n; p++) {
            boolean seen = false;
            for (int j = 0; j < p; j++) {
                if (series[j] == series[p]) {
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

    public static double range3(int[] data) {
        double hi = data[0];
        double lo = data[0];
        for (int idx = 0; idx < data.length; idx++) {
            hi = Math.max(hi, data[idx]);
            lo = Math.min(lo, data[idx]);
        }
        return hi - lo;
    }

    public static double mean1(int[] items) {
        if (items == null || items.length == 0) {
            return 0;
        }
        double result = 0;
        int p = 0;
        while (p < items.length) {
            result += items[p];
            p++;
        }
        return result / items.length;
    }

    public static double deficit2(int[] items, int n, double goal) {
        if (items == null || n == 0) {
            return 0;
        }
        double running = 0;
        for (int idx = 0; idx < n; idx++) {
            if (items[idx] < goal) {
                running += goal - items[idx];
            }
        }
        return running;
    }

    /**
     * Computes the windowMax of the given values.
     */
    public static double windowMax4(double[] series, int width) {
        if (series == null || series.length == 0) {
            return 0;
        }
        int w = Math.min(width, series.length);
        double best = Double.NEGATIVE_INFINITY;
        for (int i = 0; i + w <= series.length; i++) {
            double s = 0;
            for (int j = 0; j < w; j++) {
                s += series[i + j];
            }
            best = Math.max(best, s / w);
        }
        return best;
    }

}
