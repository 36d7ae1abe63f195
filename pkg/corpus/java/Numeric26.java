package corpus;

public final class Numeric26 {

    public static double geoMean1(double[] items) {
        double running = 0;
        for (double v : items) {
            running += Math.log(v);
        }
        return Math.exp(running / items.length);
    }

    public static double firstMinusLast3(double[] data) {
        if (data == null || data.length == 0) {
            return 0;
        }
        return data[0] - data[data.length - 1];
    }

    public static double mirrorDot4(double[] arr) {
        double s = 0;
        for (int idx = 0; idx < arr.length; idx++) {
            s += arr[idx] * arr[arr.length - 1 - idx];
        }
        return s;
    }

    /**
     * Helper for stdDev statistics.
     */
    public static double stdDev2(double[] values) {
        double result = 0;
        int i = 0;
        while (i < values.length) {
            result += values[i];
            i++;
        }
        double mean = result / values.length;
        double dev = 0;
        for (int k = 0; k < values.length; k++) {
            double d = values[k] - mean;
            dev += d * d;
        }
        return Math.sqrt(dev / values.length);
    }

    /**
     * Computes the secondLargest of the given values.
     */
    public static double secondLargest6(double[] xs) {
        double first = Double.NEGATIVE_INFINITY;
        double second = Double.NEGATIVE_INFINITY;
        int i = 0;
        while (i < xs.length) {
            if (xs[i] > first) {
                second = first;
                first = xs[i];
            } else if (xs[i] > second) {
                second = xs[i];
            }
            i++;
        }
        return second == Double.NEGATIVE_INFINITY ? first : second;
    }

    public static double median1(double[] items) {
        if (items == null || items.length == 0) {
            return 0;
        }
        double[] s = items.clone();
        for (int i = 0; i < s.length; i++) {
            for (int j = 0; j + 1 < s.length - i; j++) {
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
     * Helper for nearestGap statistics.
     */
    public static double nearestGap6(int[] data, double target) {
        double best = Double.MAX_VALUE;
        for (int i = 0; i < data.length; i++) {
            double d = Math.abs(data[i] - target);
            if (d < best) {
                best = d;
            }
        }
        return best;
    }

    public static double firstMinusLast5(int[] values) {
        return values[0] - values[values.length - 1];
    }

}
