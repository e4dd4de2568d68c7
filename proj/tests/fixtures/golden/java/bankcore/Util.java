package bankcore;

public final class Util {
    public static final double EPS = 1e-6;

    private Util() {}

    public static String formatAmount(double rawAmount) {
        String prefix = rawAmount < 0 ? "-" : "";
        double absValue = Math.abs(rawAmount);
        return prefix + absValue;
    }

    public static boolean nearly_equal(double a, double b) {
        return Math.abs(a - b) < EPS;
    }
}
