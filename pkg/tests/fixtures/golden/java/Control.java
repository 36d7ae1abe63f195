package fixtures;

public class Control {
    int classify(int n) {
        switch (n) {
            case 0: return 0;
            case 1:
            case 2: return 1;
            default: return 2;
        }
    }

    int countDown(int n) {
        int steps = 0;
        while (n > 0) {
            n--;
            steps++;
        }
        do {
            steps += 2;
        } while (steps < 10);
        return steps;
    }

    boolean both(boolean a, boolean b) {
        return a && b || !a ? true : false;
    }

    int fact(int n) {
        if (n <= 1) return 1;
        else return n * fact(n - 1);
    }

    void tryIt(String s) {
        try {
            Integer.parseInt(s);
        } catch (NumberFormatException e) {
            System.out.println("bad: " + s);
        } finally {
            cleanup();
        }
    }
}
