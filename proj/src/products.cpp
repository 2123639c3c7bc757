#include "sqir/products.hpp"

#include <cmath>

namespace sqir {

namespace {

void require_same_dims(const Operator& a, const Operator& b, const char* where) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw std::invalid_argument(std::string(where) + ": operator dimension mismatch");
    }
}

}  // namespace

Operator jordan(const Operator& a, const Operator& b) {
    require_same_dims(a, b, "jordan");
    return 0.5 * (a * b + b * a);
}

Operator lie(const Operator& a, const Operator& b) {
    require_same_dims(a, b, "lie");
    return (a * b - b * a) / Cx(0.0, 2.0);
}

StateProductDiagnostics state_product_diagnostics(const DensityOperator& rho,
                                                  const DensityOperator& sigma) {
    require_same_dims(rho.matrix(), sigma.matrix(), "state_product_diagnostics");
    StateProductDiagnostics out;
    out.tr_comp = (rho.matrix() * sigma.matrix()).trace().real();
    out.tr_jordan = jordan(rho.matrix(), sigma.matrix()).trace().real();
    out.comp_is_state = density_defects(rho.matrix() * sigma.matrix()).pass();
    out.jordan_is_state = density_defects(jordan(rho.matrix(), sigma.matrix())).pass();
    out.lie_is_state = density_defects(lie(rho.matrix(), sigma.matrix())).pass();
    return out;
}

TwirledAlgebra::TwirledAlgebra(const WeylSystem& w, DensityOperator tau)
    : weyl(w), fiducial(std::move(tau)) {
    if (fiducial.dim() != w.dim()) {
        throw std::invalid_argument("TwirledAlgebra: fiducial dimension mismatch");
    }
}

Eigen::VectorXcd induced_measure(const TwirledAlgebra& alg, const Operator& a) {
    const WeylSystem& w = alg.weyl;
    if (a.rows() != w.dim() || a.cols() != w.dim()) {
        throw std::invalid_argument("induced_measure: operator dimension mismatch");
    }
    const double inv_du2 = 1.0 / static_cast<double>(w.dim());  // d_U⁻² = 1/d
    Eigen::VectorXcd m(w.group().size());
    for (int idx = 0; idx < w.group().size(); ++idx) {
        const Eigen::MatrixXcd& u = w.displacement(idx);
        m[idx] = inv_du2 * (a * (u * alg.fiducial.matrix() * u.adjoint())).trace();
    }
    return m;
}

GroupMeasure induced_probability_measure(const TwirledAlgebra& alg, const DensityOperator& rho) {
    const Eigen::VectorXcd m = induced_measure(alg, rho.matrix());
    GroupMeasure out(alg.weyl.group());
    out.mass = m.real();
    // entries are traces of products of positive operators: clip roundoff dust
    for (int i = 0; i < out.mass.size(); ++i) {
        if (out.mass[i] < 0.0 && out.mass[i] > -1e-12) out.mass[i] = 0.0;
    }
    return out;
}

Operator twirled_product(const TwirledAlgebra& alg, const Operator& a, const Operator& b) {
    require_same_dims(a, b, "twirled_product");
    const WeylSystem& w = alg.weyl;
    if (a.rows() != w.dim()) {
        throw std::invalid_argument("twirled_product: operator dimension mismatch");
    }
    const Eigen::VectorXcd m = induced_measure(alg, a);
    Operator out = Operator::Zero(w.dim(), w.dim());
    for (int idx = 0; idx < w.group().size(); ++idx) {
        const Eigen::MatrixXcd& u = w.displacement(idx);
        out.noalias() += m[idx] * (u * b * u.adjoint());
    }
    return out;
}

DensityOperator twirled_product(const TwirledAlgebra& alg, const DensityOperator& rho,
                                const DensityOperator& sigma) {
    return DensityOperator(twirled_product(alg, rho.matrix(), sigma.matrix()));
}

}  // namespace sqir
