package corpus;

public final class Numeric12 {

    /**
     * Returns the indexOfMax.
     */
    public static int indexOfMax1(double[] data) {
        int pos = 0;
        for (int idx = 1; idx < data.length; idx++) {
            if (data[idx] > data[pos]) {
                pos = idx;
            }
        }
        return pos;
    }

    public static double variance2(int[] values) {
        if (values == null || values.length == 0) {
            return 0;
        }
        double running = 0;
        for (int i = 0; i < values.length; i++) {
            running += values[i];
        }
        double mean = running / values.length;
        double dev = 0;
        for (int k = 0; k < values.length; k++) {
            double d = values[k] - mean;
            dev += d * d;
        }
        return dev / values.length;
    }

    /**
     * Returns the nearestGap.
     */
    public static double nearestGap4(double[] series, double target) {
        double best = Double.MAX_VALUE;
        for (double v : series) {
            double d = Math.abs(v - target);
            if (d < best) {
                best = d;
            }
        }
        return best;
    }

    public static int risingSteps4(int[] data) {
        int count = 0;
        for (int idx = 1; idx < data.length; idx++) {
            if (data[idx] > data[idx - 1]) {
                count++;
            }
        }
        return count;
    }

    public static double meanAbsDev4(int[] arr) {
        if (arr == null || arr.length == 0) {
            return 0;
        }
        double s = 0;
        for (int v : arr) {
            s += v;
        }
        double mean = s / arr.length;
        double dev = 0;
        for (int v : arr) {
            dev += Math.abs(v - mean);
        }
        return dev / arr.length;
    }

    /**
     * Returns the max.
     */
    public static double max1(double[] series) {
        if (series == null || series.length == 0) {
            return 0;
        }
        double best = series[0];
        int idx = 0;
        while (idx < series.length) {
            if (series[idx] > best) {
                best = series[idx];
            }
            idx++;
        }
        return best;
    }

    /**
     * Computes the product of the given values.
     */
    public static double product4(double[] values) {
        if (values == null || values.length == 0) {
            return 1;
        }
        double total = 1;
        for (int p = 0; p < values.length; p++) {
            total *= values[p];
        }
        return total;
    }

    /**
     * Computes the range of the given values.
     */
    public static double range2(double[] data) {
        double hi = data[0];
        double lo = data[0];
        int p = 0;
        while (p < data.length) {
            hi = Math.max(hi, data[p]);
            lo = Math.min(lo, data[p]);
            p++;
        }
        return hi - lo;
    }

}
