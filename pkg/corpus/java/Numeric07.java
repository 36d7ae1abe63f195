package corpus;

public final class Numeric07 {

    public static double sumSquares2(double[] values) {
        if (values == null || values.length == 0) {
            return 0;
        }
        double result = 0;
        for (double v : values) {
            result += v * v;
        }
        return result;
    }

    /**
     * Computes the logSum of the given values.
     */
    public static double logSum1(double[] items, int n) {
        double s = 0;
        for (double v : items) {
            s += Math.log(v);
        }
        return s;
    }

    public static double geoMean5(double[] items) {
        double result = 0;
        for (double v : items) {
            result += Math.log(v);
        }
        return Math.exp(result / items.length);
    }

    public static double mean6(double[] data) {
        double total = 0;
        for (int p = 0; p < data.length; p++) {
            total += data[p];
        }
        return total / data.length;
    }

    /**
     * Computes the meanAbsDev of the given values.
     */
    public static double meanAbsDev5(double[] xs, int n) {
        if (xs == null || n == 0) {
            return 0;
        }
        double s = 0;
        int idx = 0;
        while (idx < n) {
            s += xs[idx];
            idx++;
        }
        double mean = s / n;
        double dev = 0;
        for (int k = 0; k < n; k++) {
            dev += Math.abs(xs[k] - mean);
        }
        return dev / n;
    }

    public static double first4(int[] arr) {
        return arr[0];
    }

    public static double logSum5(double[] xs) {
        if (xs == null || xs.length == 0) {
            return 0;
        }
        double result = 0;
        for (int p = 0; p < xs.length; p++) {
            result += Math.log(xs[p]);
        }
        return result;
    }

    public static double range5(double[] items, int n) {
        if (items == null || n == 0) {
            return 0;
        }
        double hi = items[0];
        double lo = items[0];
        int p = 0;
        while (p < n) {
            hi = Math.max(hi, items[p]);
            lo = Math.min(lo, items[p]);
            p++;
        }
        return hi - lo;
    }

}
