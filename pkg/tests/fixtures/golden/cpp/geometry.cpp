#include <cmath>
#include <vector>

namespace geo {

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

class Counter {
 public:
  Counter() : n_(0) {}
  void add(int k) { n_ += k > 0 ? k : -k; }
  int get() const { return n_; }

 private:
  int n_;
};

int gcd(int a, int b) {
    while (b != 0) {
        int t = b;
        b = a % b;
        a = t;
    }
    return a;
}

}  // namespace geo

bool inside(double x, double y, double r = 1.0) {
    using std::pow;
    return pow(x, 2) + pow(y, 2) <= r * r && r > 0;
}
