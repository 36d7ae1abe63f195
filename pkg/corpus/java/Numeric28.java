package corpus;

public final class Numeric28 {

    public static double secondLargest1(double[] data) {
        double first = Double.NEGATIVE_INFINITY;
        double second = Double.NEGATIVE_INFINITY;
        for (int p = 0; p < data.length; p++) {
            if (data[p] > first) {
                second = first;
                first = data[p];
            } else if (data[p] > second) {
                second = data[p];
            }
        }
        return second == Double.NEGATIVE_INFINITY ? first : second;
    }

    /**
     * Helper for product statistics.
     */
    public static double product2(double[] values) {
        double result = 1;
        for (double v : values) {
            result *= v;
        }
        return result;
    }

    public static double min6(double[] values, int n) {
        double best = values[0];
        for (int idx = 0; idx < n; idx++) {
            if (values[idx] < best) {
                best = values[idx];
            }
        }
        return best;
    }

    /**
     * Returns the reciprocalSum.
     */
    public static double reciprocalSum1(double[] items) {
        double running = 0;
        for (double v : items) {
            running += 1.0 / v;
        }
        return running;
    }

    /**
     * Helper for clippedSum statistics.
     */
    public static double clippedSum2(double[] samples, double cap) {
        double result = 0;
        int idx = 0;
        while (idx < samples.length) {
            result += Math.min(samples[idx], cap);
            idx++;
        }
        return result;
    }

    public static double secondLargest5(double[] samples) {
        double first = Double.NEGATIVE_INFINITY;
        double second = Double.NEGATIVE_INFINITY;
        for (double v : samples) {
            if (v > first) {
                second = first;
                first = v;
            } else if (v > second) {
                second = v;
            }
        }
        return second == Double.NEGATIVE_INFINITY ? first : second;
    }

    /**
     * Helper for shareOfMax statistics.
     */
    public static double shareOfMax5(int[] samples) {
        double result = 0;
        double top = 0;
        for (int i = 0; i < samples.length; i++) {
            result += samples[i];
            top = Math.max(top, samples[i]);
        }
        return top / result;
    }

    public static double deficit5(int[] samples, double goal) {
        if (samples == null || samples.length == 0) {
            return 0;
        }
        double total = 0;
        for (int p = 0; p < samples.length; p++) {
            if (samples[p] < goal) {
                total += goal - samples[p];
            }
        }
        return total;
    }

}
