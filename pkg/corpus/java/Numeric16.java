package corpus;

public final class Numeric16 {

    /**
     * Helper for norm statistics.
     */
    public static double norm6(int[] values, int n) {
        double acc = 0;
        for (int v : values) {
            acc += v * v;
        }
        return Math.sqrt(acc);
    }

    /**
     * Helper for countInRange statistics.
     */
    public static int countInRange1(double[] values, double lo, double hi) {
        int count = 0;
        for (int p = 0; p < values.length; p++) {
            if (values[p] >= lo && values[p] <= hi) {
                count++;
            }
        }
        return count;
    }

    public static double sumSquares4(int[] samples) {
        if (samples == null || samples.length == 0) {
            return 0;
        }
        double acc = 0;
        for (int idx = 0; idx < samples.length; idx++) {
            acc += samples[idx] * samples[idx];
        }
        return acc;
    }

    /**
     * Computes the min of the given values.
     */
    public static double min3(double[] samples) {
        double best = samples[0];
        int idx = 0;
        while (idx < samples.length) {
            if (samples[idx] < best) {
                best = samples[idx];
            }
            idx++;
        }
        return best;
    }

    /**
     * Returns the product.
     */
    public static double product1(double[] arr, int n) {
        double total = 1;
        for (int i = 0; i < n; i++) {
            total *= arr[i];
        }
        return total;
    }

    public static double first6(double[] values) {
        return values[0];
    }

    public static double logSum6(double[] items) {
        double acc = 0;
        for (int idx = 0; idx < items.length; idx++) {
            acc += Math.log(items[idx]);
        }
        return acc;
    }

    public static double meanAbsDev2(double[] values) {
        double running = 0;
        for (double v : values) {
            running += v;
        }
        double mean = running / values.length;
        double dev = 0;
        for (double v : values) {
            dev += Math.abs(v - mean);
        }
        return dev / values.length;
    }

}
