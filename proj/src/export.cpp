#include "glulib/complex.hpp"

#include <sstream>

namespace glulib {

std::string export_text(const FreeComplex& F) {
    std::ostringstream os;
    os << "complex\n";
    os << "ring " << F.ring.nvars() << "\n";
    for (int i = 0; i < F.ring.nvars(); ++i)
        os << "var " << F.ring.names[static_cast<size_t>(i)] << " "
           << F.ring.weights[static_cast<size_t>(i)] << "\n";
    os << "length " << F.length() << "\n";
    for (int k = 0; k <= F.length(); ++k) {
        os << "module " << k << ":";
        for (int64 s : F.shifts[static_cast<size_t>(k)]) os << " " << s;
        os << "\n";
    }
    for (int k = 1; k <= F.length(); ++k) {
        const PolyMatrix& d = F.diff(k);
        os << "diff " << k << " " << d.rows << " " << d.cols << "\n";
        for (int r = 0; r < d.rows; ++r)
            for (int c = 0; c < d.cols; ++c)
                if (!d.at(r, c).is_zero())
                    os << r << " " << c << " " << to_string(d.at(r, c), F.ring) << "\n";
    }
    os << "end\n";
    return os.str();
}

std::string export_macaulay2(const FreeComplex& F) {
    std::ostringstream os;
    os << "-- weighted graded free complex\n";
    os << "R = QQ[";
    for (int i = 0; i < F.ring.nvars(); ++i)
        os << (i ? "," : "") << F.ring.names[static_cast<size_t>(i)];
    os << ", Degrees => {";
    for (int i = 0; i < F.ring.nvars(); ++i)
        os << (i ? "," : "") << F.ring.weights[static_cast<size_t>(i)];
    os << "}];\n";
    for (int k = 0; k <= F.length(); ++k) {
        os << "F" << k << " = R^{";
        const auto& sk = F.shifts[static_cast<size_t>(k)];
        for (size_t i = 0; i < sk.size(); ++i) os << (i ? "," : "") << -sk[i];
        os << "};\n";
    }
    for (int k = 1; k <= F.length(); ++k) {
        const PolyMatrix& d = F.diff(k);
        os << "d" << k << " = map(F" << k - 1 << ", F" << k << ", ";
        bool all_zero = true;
        for (const Poly& p : d.a)
            if (!p.is_zero()) all_zero = false;
        if (all_zero || d.rows == 0 || d.cols == 0) {
            os << "0);\n";
            continue;
        }
        os << "matrix {";
        for (int r = 0; r < d.rows; ++r) {
            os << (r ? "," : "") << "{";
            for (int c = 0; c < d.cols; ++c)
                os << (c ? "," : "") << to_string(d.at(r, c), F.ring);
            os << "}";
        }
        os << "});\n";
    }
    for (int k = 1; k <= F.length(); ++k) os << "assert(isHomogeneous d" << k << ");\n";
    for (int k = 2; k <= F.length(); ++k)
        os << "assert(d" << k - 1 << " * d" << k << " == 0);\n";
    return os.str();
}

} // namespace glulib
