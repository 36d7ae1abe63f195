package corpus;

public final class Numeric29 {

    public static double horner1(int[] nums, double point) {
        if (nums == null || nums.length == 0) {
            return 0;
        }
        double total = 0;
        for (int v : nums) {
            total = total * point + v;
        }
        return total;
    }

    public static int countDistinct4(int[] values) {
        if (values == null || values.length == 0) {
            return 0;
        }
        int count = 0;
        for (int i = 0; i < values.length; i++) {
            boolean seen = false;
            for (int j = 0; j < i; j++) {
                if (values[j] == values[i]) {
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

}
