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

#include "qortho/synth_three_qubit.hpp"

#include <cmath>

namespace qortho {

Circuit emit_magic_circuit(bool adjoint) {
    Circuit c(3);
    if (!adjoint) {
        c.append(Gate::rz(2, -0.25 * PI));
        c.append(Gate::ry(2, 0.25 * PI));
        c.append(Gate::rz(1, 0.25 * PI));
        c.append(Gate::cnot(2, 1));
    } else {
        c.append(Gate::cnot(2, 1));
        c.append(Gate::rz(1, -0.25 * PI));
        c.append(Gate::ry(2, -0.25 * PI));
        c.append(Gate::rz(2, 0.25 * PI));
    }
    return c;
}

Circuit emit_a_tilde_circuit(double a, double b, double c) {
    Circuit out(3);
    out.append(Gate::cnot(1, 3));
    out.append(Gate::ry(3, c));
    out.append(Gate::cnot(2, 3));
    out.append(Gate::ry(3, -b));
    out.append(Gate::cnot(1, 3));
    out.append(Gate::ry(3, a));
    out.append(Gate::cnot(2, 3));
    return out;
}

Circuit emit_a_circuit(double a, double b, double c, double d) {
    Circuit out(3);
    out.append(Gate::ry(3, d));
    out.append(Gate::cnot(2, 1));
    out.append(Gate::ry(2, -0.25 * PI));
    out.append(Gate::cnot(1, 3));
    out.append(Gate::ry(3, c));
    out.append(Gate::cnot(2, 3));
    out.append(Gate::ry(3, -b));
    out.append(Gate::cnot(1, 3));
    out.append(Gate::ry(3, a));
    out.append(Gate::cnot(2, 3));
    out.append(Gate::ry(2, 0.25 * PI));
    out.append(Gate::cnot(2, 1));
    return out;
}

Circuit emit_a1_circuit(double alpha, double beta) {
    Circuit out(3);
    out.append(Gate::cnot(2, 3));
    out.append(Gate::rz(3, alpha));
    out.append(Gate::cnot(2, 3));
    out.append(Gate::cnot(1, 3));
    out.append(Gate::rz(3, beta));
    out.append(Gate::cnot(1, 3));
    return out;
}

namespace {

/// Split an 8x8 factor of the form (4x4 on qubits 1-2) (x) I into its
/// one-qubit pieces and emit the ZYZ triple for each, first qubit 1 then
/// qubit 2 in application order. K factors arrive in SU(2) (x) SU(2), so
/// both triples reconstruct with unit phase.
void emit_local_triples(const CMat &k, Circuit &c, EulerZYZ &e1, EulerZYZ &e2,
                        cdouble &phase_acc, const NumericContext &ctx) {
    CMat k4(4);
    double off = 0.0;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            k4.at(i, j) = k.at(2 * i, 2 * j);
            off = std::max(off, std::abs(k.at(2 * i, 2 * j + 1)));
            off = std::max(off, std::abs(k.at(2 * i + 1, 2 * j) ));
            off = std::max(off, std::abs(k.at(2 * i + 1, 2 * j + 1) - k.at(2 * i, 2 * j)));
        }
    }
    if (off > ctx.product_residual) {
        throw Error(Errc::ProductRepairFailed, "K factor is not identity on qubit 3");
    }
    ProductSplit split = nearest_product_2x2(k4);
    if (split.residual > ctx.product_residual) {
        throw Error(Errc::ProductRepairFailed, "K factor is not a local product");
    }
    auto to_su2 = [](CMat &f) {
        const cdouble d = det(f);
        if (std::abs(d) < 1e-12) {
            throw Error(Errc::ProductRepairFailed, "degenerate local factor");
        }
        f = f * (cdouble{1.0, 0.0} / std::polar(std::sqrt(std::abs(d)), 0.5 * std::arg(d)));
    };
    to_su2(split.left);
    to_su2(split.right);
    // The SU(2)-normalized pair matches k4 up to a sign; fold it into the
    // left factor so the product is exact.
    const cdouble align = (kron(split.left, split.right).adjoint() * k4).trace() / 4.0;
    if (align.real() < 0.0) {
        split.left = split.left * cdouble{-1.0, 0.0};
    }

    e1 = euler_zyz(split.left, ctx);
    e2 = euler_zyz(split.right, ctx);
    phase_acc *= e1.phase * e2.phase;
    c.append(Gate::rz(1, e1.psi)).append(Gate::ry(1, e1.phi)).append(Gate::rz(1, e1.theta));
    c.append(Gate::rz(2, e2.psi)).append(Gate::ry(2, e2.phi)).append(Gate::rz(2, e2.theta));
}

} // namespace

Synth3Result synth_so8(const CMat &x, bool run_optimizer, const NumericContext &ctx) {
    if (x.dim() != 8) {
        throw Error(Errc::DimMismatch, "three-qubit synthesis expects an 8x8 matrix");
    }
    if (!x.is_real(ctx.orthogonal_tol) || x.unitary_deviation() > ctx.orthogonal_tol) {
        throw Error(Errc::NotOrthogonal, "input is not real orthogonal");
    }
    const cdouble d = det(x);
    if (std::abs(d - cdouble{1.0, 0.0}) > ctx.determinant_tol) {
        throw Error(Errc::WrongDeterminant,
                    "determinant is not +1 (three-qubit synthesis is unimodular only)");
    }

    Synth3Result out;
    const CMat m = magic();
    const CMat conjugated = m * x * m.adjoint();

    out.outer = kak_factor(conjugated, InvolutionSpec::three_qubit_outer(), ctx);
    out.inner_left = kak_factor(out.outer.k1, InvolutionSpec::three_qubit_inner(), ctx);
    out.inner_right = kak_factor(out.outer.k2, InvolutionSpec::three_qubit_inner(), ctx);
    for (int i = 0; i < 4; i++) {
        out.abelian_outer[static_cast<size_t>(i)] = out.outer.params.at(static_cast<size_t>(i));
    }
    for (int i = 0; i < 2; i++) {
        out.abelian_inner_left[static_cast<size_t>(i)] = out.inner_left.params.at(static_cast<size_t>(i));
        out.abelian_inner_right[static_cast<size_t>(i)] = out.inner_right.params.at(static_cast<size_t>(i));
    }

    // Application order reads the factor chain right to left:
    // magic, K4, A1(right), K3, A, K2, A1(left), K1, adjoint magic.
    Circuit c(3);
    cdouble phase{1.0, 0.0};
    c.append(emit_magic_circuit(false));
    emit_local_triples(out.inner_right.k2, c, out.euler[6], out.euler[7], phase, ctx);
    c.append(emit_a1_circuit(out.abelian_inner_right[0], out.abelian_inner_right[1]));
    emit_local_triples(out.inner_right.k1, c, out.euler[4], out.euler[5], phase, ctx);
    c.append(emit_a_circuit(out.abelian_outer[0], out.abelian_outer[1], out.abelian_outer[2],
                            out.abelian_outer[3]));
    emit_local_triples(out.inner_left.k2, c, out.euler[2], out.euler[3], phase, ctx);
    c.append(emit_a1_circuit(out.abelian_inner_left[0], out.abelian_inner_left[1]));
    emit_local_triples(out.inner_left.k1, c, out.euler[0], out.euler[1], phase, ctx);
    c.append(emit_magic_circuit(true));

    out.raw_circuit = c;
    out.circuit = run_optimizer ? optimize(c, ctx.zero_angle_eps) : c;
    out.gate_counts = counts(out.circuit);

    const PhaseDistance pd = phase_distance(simulate(out.circuit), x);
    out.reconstruction_error = pd.distance;
    out.global_phase = pd.phase;
    if (out.reconstruction_error > ctx.factor_residual) {
        throw Error(Errc::FactorizationResidual, "synthesized circuit does not reproduce input");
    }
    return out;
}

} // namespace qortho
