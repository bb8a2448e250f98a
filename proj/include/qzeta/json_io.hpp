#pragma once

#include "qzeta/quaternion.hpp"
#include "qzeta/series.hpp"
#include "qzeta/series_matrix.hpp"

#include <json.hpp>

namespace qzeta {

// JSON shapes used by reports and diagnostics: rationals are exact strings
// ("p" or "p/q"), quaternions arrays of four such strings, series arrays of
// coefficients by ascending degree, matrices row-major nested arrays.
// Templated on the json type so both nlohmann::json and
// nlohmann::ordered_json pick these up through ADL.

template <class J>
void to_json(J& j, const Rational& r) {
    j = r.str();
}

template <class J>
void to_json(J& j, const GaussianRational& z) {
    j = J::array({z.re().str(), z.im().str()});
}

template <class J>
void to_json(J& j, const Quaternion& q) {
    j = J::array({q.x0().str(), q.x1().str(), q.x2().str(), q.x3().str()});
}

template <class J, class C>
void to_json(J& j, const TruncatedSeries<C>& s) {
    j = J::array();
    for (int k = 0; k <= s.order(); ++k) {
        J c;
        to_json(c, s.coeff(k));
        j.push_back(std::move(c));
    }
}

template <class J, class C>
void to_json(J& j, const SeriesMatrix<C>& m) {
    j = J::array();
    for (int i = 0; i < m.rows(); ++i) {
        J row = J::array();
        for (int c = 0; c < m.cols(); ++c) {
            J entry;
            to_json(entry, m(i, c));
            row.push_back(std::move(entry));
        }
        j.push_back(std::move(row));
    }
}

}  // namespace qzeta
