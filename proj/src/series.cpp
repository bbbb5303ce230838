#include <algorithm>
#include <array>
#include <initializer_list>

#include "umbilic/minitwistor.hpp"

namespace umbilic {

cplx SectionSeries::operator()(int n, int m) const {
    if (n < 0 || m < 0) return 0.0;
    auto it = entries_.find({n, m});
    return it == entries_.end() ? cplx(0.0) : it->second;
}

void SectionSeries::set(int n, int m, cplx value) {
    if (n < 0 || m < 0) throw InputError("SectionSeries: negative index");
    entries_[{n, m}] = value;
}

void SectionSeries::add(int n, int m, cplx value) {
    if (n < 0 || m < 0) throw InputError("SectionSeries: negative index");
    entries_[{n, m}] += value;
}

int SectionSeries::max_index() const {
    int out = -1;
    for (const auto& [key, value] : entries_) out = std::max({out, key.first, key.second});
    return out;
}

cplx SectionSeries::evaluate(cplx xi) const {
    cplx acc = 0.0;
    for (const auto& [key, value] : entries_) acc += value * ipow(xi, key.first) * ipow(std::conj(xi), key.second);
    return acc;
}

double DefectList::max() const {
    double m = 0.0;
    for (double d : defect) m = std::max(m, d);
    return m;
}

namespace {

using Key = SectionSeries::Key;

/// Instances referencing a negative index are not formed; instances whose
/// coefficients all lie outside the support are trivially satisfied.
bool instantiable(const SectionSeries& s, std::initializer_list<Key> refs) {
    bool touches = false;
    for (const auto& [n, m] : refs) {
        if (n < 0 || m < 0) return false;
        touches = touches || s.contains(n, m);
    }
    return touches;
}

}  // namespace

ConditionReport check_series_conditions(const SectionSeries& s, double tol) {
    ConditionReport report;
    for (const char* name : {"eq6", "eq7", "eq8", "I", "II", "III", "IV", "V"}) report.families[name];
    for (const char* name : {"I", "III", "IV"}) report.boundary[name];
    if (s.empty()) return report;

    const int top = s.max_index() + 3;
    auto A = [&](int n, int m) { return s(n, m); };
    auto Ab = [&](int n, int m) { return std::conj(s(n, m)); };
    // e_nm: coefficient of xi^n conj(xi)^m in (1 + |xi|^2) dF - 2 conj(xi) F; reality <=> e_nm = conj(e_mn)
    auto e = [&](int n, int m) { return double(n + 1) * A(n + 1, m) + double(n - 2) * A(n, m - 1); };

    auto& f = report.families;
    if (instantiable(s, {{1, 0}})) f["eq6"].push(1, 0, std::abs(A(1, 0) - Ab(1, 0)));
    for (int n = 1; n <= top; ++n)
        if (instantiable(s, {{n + 1, 0}, {1, n}, {0, n - 1}}))
            f["eq7"].push(n, 0, std::abs(double(n + 1) * A(n + 1, 0) - Ab(1, n) + 2.0 * Ab(0, n - 1)));
    for (int n = 1; n <= top; ++n)
        for (int m = n; m <= top; ++m)
            if (instantiable(s, {{n + 1, m}, {n, m - 1}, {m + 1, n}, {m, n - 1}}))
                f["eq8"].push(n, m, std::abs(e(n, m) - std::conj(e(m, n))));

    auto cond_I = [&](int n) { return std::abs(A(n, n - 1) - Ab(n, n - 1)); };
    auto cond_III = [&](int n) {
        return std::abs(double(n + 2) * A(n + 2, 2) + double(n - 1) * A(n + 1, 1) - 3.0 * Ab(3, n + 1));
    };
    auto cond_IV = [&](int n, int m) {
        return std::abs(double(n + 2) * A(n + 2, m + 1) + double(n - 1) * A(n + 1, m) -
                        double(m + 2) * Ab(m + 2, n + 1) - double(m - 1) * Ab(m + 1, n));
    };

    for (int n = 1; n <= top; ++n) {
        auto& dest_I = n > 1 ? f["I"] : report.boundary["I"];
        if (instantiable(s, {{n, n - 1}})) dest_I.push(n, n - 1, cond_I(n));
    }
    for (int n = 2; n <= top; ++n) {
        if (instantiable(s, {{0, n - 2}, {1, n - 1}, {2, n}, {n + 1, 1}}))
            f["II"].push(n, 0,
                         std::abs(2.0 * double(n - 2) * A(0, n - 2) - 2.0 * double(n - 1) * A(1, n - 1) +
                                  2.0 * double(n) * A(2, n) - double(n * (n + 1)) * Ab(n + 1, 1)));
    }
    for (int n = 0; n <= top; ++n) {
        auto& dest = n > 1 ? f["III"] : report.boundary["III"];
        if (instantiable(s, {{n + 2, 2}, {n + 1, 1}, {3, n + 1}})) dest.push(n, 0, cond_III(n));
    }
    for (int n = 0; n <= top; ++n)
        for (int m = 0; m <= top; ++m) {
            auto& dest = (n > 1 && m < n) ? f["IV"] : report.boundary["IV"];
            if (instantiable(s, {{n + 2, m + 1}, {n + 1, m}, {m + 2, n + 1}, {m + 1, n}}))
                dest.push(n, m, cond_IV(n, m));
        }
    // V defines the holomorphic part A_n0; checked only where that part is given.
    for (int n = 2; n <= top; ++n)
        if (s.contains(n, 0))
            f["V"].push(n, 0, std::abs(double(n) * A(n, 0) - Ab(1, n - 1) + 2.0 * Ab(0, n - 2)));

    for (const auto& [name, list] : report.families) report.max_defect = std::max(report.max_defect, list.max());
    for (const auto& [name, list] : report.boundary)
        report.max_boundary_defect = std::max(report.max_boundary_defect, list.max());
    report.pass = report.max_defect <= tol;
    return report;
}

VectorXc fourier_G(const SectionSeries& series, int k) {
    if (k < 0) throw InputError("fourier_G: order must be non-negative");
    VectorXc out(k + 1);
    for (int n = 0; n <= k; ++n) out[n] = double(k - n + 1) * series(n, k - n + 1);
    return out;
}

}  // namespace umbilic
