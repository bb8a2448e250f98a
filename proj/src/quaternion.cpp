#include "qzeta/quaternion.hpp"

#include <ostream>
#include <stdexcept>

namespace qzeta {

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("gaussian rational not invertible");
    Rational n = norm_sq().inverse();
    return {re_ * n, -im_ * n};
}

Quaternion Quaternion::inverse() const {
    if (is_zero()) throw std::domain_error("quaternion not invertible");
    Rational n = norm_sq().inverse();
    return {x0_ * n, -x1_ * n, -x2_ * n, -x3_ * n};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << "(" << z.re() << ", " << z.im() << "i)";
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "[" << q.x0() << ", " << q.x1() << ", " << q.x2() << ", " << q.x3() << "]";
}

}  // namespace qzeta
