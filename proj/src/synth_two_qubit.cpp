/*
 * Copyright 2026 The qortho Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qortho/synth_two_qubit.hpp"

#include <cmath>

namespace qortho {

namespace {

void gate_input(const CMat &x, double want_det, const NumericContext &ctx) {
    if (x.dim() != 4) {
        throw Error(Errc::DimMismatch, "two-qubit synthesis expects a 4x4 matrix");
    }
    if (!x.is_real(ctx.orthogonal_tol) || x.unitary_deviation() > ctx.orthogonal_tol) {
        throw Error(Errc::NotOrthogonal, "input is not real orthogonal");
    }
    const cdouble d = det(x);
    if (std::abs(d - cdouble{want_det, 0.0}) > ctx.determinant_tol) {
        throw Error(Errc::WrongDeterminant,
                    want_det > 0 ? "determinant is not +1" : "determinant is not -1");
    }
}

/// Angles (qubit 1, qubit 2) of a real k = Ry(beta) (x) Ry(alpha) factor.
std::pair<double, double> local_y_angles(const CMat &k, const NumericContext &ctx) {
    ProductSplit split = nearest_product_2x2(k);
    if (split.residual > ctx.product_residual) {
        throw Error(Errc::FactorizationResidual, "K factor is not a local product");
    }
    auto angle_of = [](const CMat &f) {
        // f is a scaled rotation; atan2 of the first column gives the angle
        // regardless of the shared scale sign convention.
        return std::atan2(f.at(1, 0).real(), f.at(0, 0).real());
    };
    return {angle_of(split.left), angle_of(split.right)};
}

} // namespace

Synth2Result synth_so4(const CMat &x, bool run_optimizer, const NumericContext &ctx) {
    gate_input(x, 1.0, ctx);
    Synth2Result out;
    out.kak = kak_factor(x, InvolutionSpec::two_qubit(), ctx);

    const auto [b1, a1] = local_y_angles(out.kak.k1, ctx);
    const auto [b2, a2] = local_y_angles(out.kak.k2, ctx);
    // Abelian parameters on the {XY, YZ} basis; the first drives the
    // rotation on qubit 2, the second the rotation on qubit 1.
    const double pa = out.kak.params.at(0);
    const double pb = out.kak.params.at(1);

    Circuit c(2);
    c.append(Gate::ry(1, b2)).append(Gate::ry(2, a2));
    c.append(Gate::cnot(2, 1));
    c.append(Gate::ry(2, pa)).append(Gate::ry(1, pb));
    c.append(Gate::cnot(2, 1));
    c.append(Gate::ry(1, b1)).append(Gate::ry(2, a1));

    out.circuit = run_optimizer ? optimize(c, ctx.zero_angle_eps) : c;
    out.gate_counts = counts(out.circuit);
    out.reconstruction_error = frobenius_distance(simulate(out.circuit), x);
    if (out.reconstruction_error > ctx.factor_residual) {
        throw Error(Errc::FactorizationResidual, "synthesized circuit does not reproduce input");
    }
    return out;
}

Synth2Result synth_o4(const CMat &x, bool run_optimizer, const NumericContext &ctx) {
    gate_input(x, -1.0, ctx);
    // x = C * x' with C the det -1 CNOT(2 -> 1); x' is special orthogonal.
    Circuit fixup(2);
    fixup.append(Gate::cnot(2, 1));
    const CMat c_mat = simulate(fixup);
    Synth2Result out = synth_so4((c_mat * x).real_part(), run_optimizer, ctx);

    Circuit c = out.circuit;
    c.append(Gate::cnot(2, 1));
    out.circuit = run_optimizer ? optimize(c, ctx.zero_angle_eps) : c;
    out.gate_counts = counts(out.circuit);
    out.reconstruction_error = frobenius_distance(simulate(out.circuit), x);
    if (out.reconstruction_error > ctx.factor_residual) {
        throw Error(Errc::FactorizationResidual, "synthesized circuit does not reproduce input");
    }
    return out;
}

Synth2Result dispatch_2q(const CMat &x, bool run_optimizer, const NumericContext &ctx) {
    if (x.dim() != 4) {
        throw Error(Errc::DimMismatch, "two-qubit synthesis expects a 4x4 matrix");
    }
    if (!x.is_real(ctx.orthogonal_tol) || x.unitary_deviation() > ctx.orthogonal_tol) {
        throw Error(Errc::NotOrthogonal, "input is not real orthogonal");
    }
    return det(x).real() >= 0.0 ? synth_so4(x, run_optimizer, ctx)
                                : synth_o4(x, run_optimizer, ctx);
}

} // namespace qortho
