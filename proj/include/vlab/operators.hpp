#pragma once

#include <functional>
#include <string>

#include "vlab/eigen.hpp"
#include "vlab/rng.hpp"
#include "vlab/sym_matrix.hpp"

namespace vlab {

enum class OperatorKind { LambdaK, PMinusK, PPlusK, Plug };

const char* operator_kind_name(OperatorKind k);
OperatorKind operator_kind_from_name(const std::string& name);

// Which pure second-order operator is meant. The builtins are positively
// homogeneous of degree 1; plug operators must declare their own degree.
struct OperatorSpec {
    OperatorKind kind = OperatorKind::LambdaK;
    int k = 1;
    double homogeneity_degree = 1.0;
    std::function<double(const SymMatrix&)> plug_eval;
    std::string plug_name;

    std::string name() const;
};

// k-th smallest eigenvalue, 1-based.
double lambda_k(const SymMatrix& X, int k);
// Sum of the k smallest / k largest eigenvalues.
double pminus_k(const SymMatrix& X, int k);
double pplus_k(const SymMatrix& X, int k);

struct KFrameValue {
    double value;
    Mat frame; // n x k orthonormal columns attaining the minimum
};

// min over orthonormal k-frames of sum_j <X v_j, v_j>, with an attaining frame.
KFrameValue pminus_k_frame(const SymMatrix& X, int k);

double operator_eval(const OperatorSpec& op, const SymMatrix& X);

// Sample-based verification of degenerate ellipticity and positive
// homogeneity for plug operators; the builtins pass it by construction.
struct OperatorPropertyReport {
    bool degenerate_elliptic = true;
    bool homogeneous = true;
    double worst_ellipticity_violation = 0.0;
    double worst_homogeneity_error = 0.0;
    int samples = 0;
};

OperatorPropertyReport verify_operator_properties(const OperatorSpec& op, int dim, int samples, Rng& rng);

} // namespace vlab
