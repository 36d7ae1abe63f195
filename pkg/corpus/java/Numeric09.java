package corpus;

public final class Numeric09 {

    public static double deficit4(double[] values, double goal) {
        if (values == null || values.length == 0) {
            return 0;
        }
        double running = 0;
        for (int p = 0; p < values.length; p++) {
            if (values[p] < goal) {
                running += goal - values[p];
            }
        }
        return running;
    }

    /**
     * Computes the max of the given values.
     */
    public static double max5(double[] items) {
        if (items == null || items.length == 0) {
            return 0;
        }
        double best = items[0];
        int i = 0;
        while (i < items.length) {
            if (items[i] > best) {
                best = items[i];
            }
            i++;
        }
        return best;
    }

    public static double coeffVariation6(double[] items) {
        double result = 0;
        for (int i = 0; i < items.length; i++) {
            result += items[i];
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

    public static int countDistinct2(double[] series) {
        int count = 0;
        for (int p = 0; p < series.length; p++) {
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

    /**
     * Computes the norm of the given values.
     */
    public static double norm4(double[] xs, int n) {
        if (xs == null || n == 0) {
            return 0;
        }
        double running = 0;
        int i = 0;
        while (i < n) {
            running += xs[i] * xs[i];
            i++;
        }
        return Math.sqrt(running);
    }

    public static double geoMean4(double[] items, int n) {
        double total = 0;
        int p = 0;
        while (p < n) {
            total += Math.log(items[p]);
            p++;
        }
        return Math.exp(total / n);
    }

    public static double sum1(double[] values) {
        if (values == null || values.length == 0) {
            return 0;
        }
        double s = 0;
        int p = 0;
        while (p < values.length) {
            s += values[p];
            p++;
        }
        return s;
    }

    /**
     * Helper for maxReciprocal statistics.
     */
    public static double maxReciprocal5(double[] xs, int n) {
        if (xs == null || n == 0) {
            return 0;
        }
        double best = 0;
        for (int p = 0; p < n; p++) {
            best = Math.max(best, 1.0 / xs[p]);
        }
        return best;
    }

}
