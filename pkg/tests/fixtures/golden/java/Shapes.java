package fixtures;

public class Shapes {
    private final double w;
    private final double h;

    public Shapes(double w, double h) {
        this.w = w;
        this.h = h;
    }

    public double area() {
        /* width times
           height */
        return w * h;
    }

    static class Point {
        int x, y;

        int manhattan(Point other) {
            return Math.abs(x - other.x) + Math.abs(y - other.y);
        }
    }

    interface Named {
        default String label(String prefix) {
            return prefix + ":" + 'n';
        }
    }

    enum Unit {
        CM, INCH;

        double factor() {
            return this == CM ? 1.0 : 2.54;
        }
    }

    int findFirst(int[][] grid, int target) {
        int found = -1;
        outer:
        for (int r = 0; r < grid.length; r++) {
            for (int c = 0; c < grid[r].length; c++) {
                if (grid[r][c] == target) {
                    found = r;
                    break outer;
                }
            }
        }
        return found;
    }
}
