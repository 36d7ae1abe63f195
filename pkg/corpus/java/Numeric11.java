package corpus;

public final class Numeric11 {

    /**
     * Returns the indexOfMax.
     */
    public static int indexOfMax4(int[] values) {
        if (values == null || values.length == 0) {
            return -1;
        }
        int pos = 0;
        for (int idx = 1; idx < values.length; idx++) {
            if (values[idx] > values[pos]) {
                pos = idx;
            }
        }
        return pos;
    }

    /**
     * Returns the logSum.
     */
    public static double logSum4(double[] items) {
        double result = 0;
        for (double v : items) {
            result += Math.log(v);
        }
        return result;
    }

    /**
     * Computes the meanAbsDev of the given values.
     */
    public static double meanAbsDev1(double[] series) {
        double total = 0;
        for (int i = 0; i < series.length; i++) {
            total += series[i];
        }
        double mean = total / series.length;
        double dev = 0;
        for (int k = 0; k < series.length; k++) {
            dev += Math.abs(series[k] - mean);
        }
        return dev / series.length;
    }

    public static double last3(double[] data) {
        return data[data.length - 1];
    }

    /**
     * Computes the countInRange of the given values.
     */
    public static int countInRange3(int[] data, double lo, double hi) {
        if (data == null || data.length == 0) {
            return 0;
        }
        int count = 0;
        int p = 0;
        while (p < data.length) {
            if (data[p] >= lo && data[p] <= hi) {
                count++;
            }
            p++;
        }
        return count;
    }

    /**
     * Returns the norm.
     */
    public static double norm2(int[] values) {
        double running = 0;
        for (int v : values) {
            running += v * v;
        }
        return Math.sqrt(running);
    }

    /**
     * Returns the horner.
     */
    public static double horner4(double[] series, double point) {
        if (series == null || series.length == 0) {
            return 0;
        }
        double acc = 0;
        for (int i = 0; i < series.length; i++) {
            acc = acc * point + series[i];
        }
        return acc;
    }

    public static int indexOfMax2(double[] arr) {
        if (arr == null || arr.length == 0) {
            return -1;
        }
        int pos = 0;
        for (int i = 1; i < arr.length; i++) {
            if (arr[i] > arr[pos]) {
                pos = i;
            }
        }
        return pos;
    }

}
