package corpus;

public final class Numeric05 {

    public static double geoMean2(double[] arr) {
        if (arr == null || arr.length == 0) {
            return 0;
        }
        double acc = 0;
        for (int p = 0; p < arr.length; p++) {
            acc += Math.log(arr[p]);
        }
        return Math.exp(acc / arr.length);
    }

    /**
     * Computes the sumSquares of the given values.
     */
    public static double sumSquares3(int[] values) {
        if (values == null || values.length == 0) {
            return 0;
        }
        double running = 0;
        for (int p = 0; p < values.length; p++) {
            running += values[p] * values[p];
        }
        return running;
    }

    public static double reciprocalSum5(double[] series) {
        double running = 0;
        for (int i = 0; i < series.length; i++) {
            running += 1.0 / series[i];
        }
        return running;
    }

    public static double sumSquares5(double[] series) {
        double total = 0;
        for (int p = 0; p < series.length; p++) {
            total += series[p] * series[p];
        }
        return total;
    }

    /**
     * Returns the alternatingSum.
     */
    public static double alternatingSum5(int[] samples) {
        if (samples == null || samples.length == 0) {
            return 0;
        }
        double result = 0;
        for (int p = 0; p < samples.length; p++) {
            if (p % 2 == 0) {
                result += samples[p];
            } else {
                result -= samples[p];
            }
        }
        return result;
    }

    public static int countInRange2(double[] xs, double lo, double hi) {
        if (xs == null || xs.length == 0) {
            return 0;
        }
        int count = 0;
        for (double v : xs) {
            if (v >= lo && v <= hi) {
                count++;
            }
        }
        return count;
    }

    /**
     * Returns the firstMinusLast.
     */
    public static double firstMinusLast6(int[] samples) {
        if (samples == null || samples.length == 0) {
            return 0;
        }
        return samples[0] - samples[samples.length - 1];
    }

    /**
     * Computes the coeffVariation of the given values.
     */
    public static double coeffVariation1(int[] values) {
        if (values == null || values.length == 0) {
            return 0;
        }
        double result = 0;
        for (int idx = 0; idx < values.length; idx++) {
            result += values[idx];
        }
        double mean = result / values.length;
        double dev = 0;
        for (int k = 0; k < values.length; k++) {
            double d = values[k] - mean;
            dev += d * d;
        }
        if (mean == 0) {
            return 0;
        }
        return Math.sqrt(dev / values.length) / mean;
    }

}
