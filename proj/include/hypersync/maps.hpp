#pragma once

#include <span>
#include <string>
#include <vector>

#include "hypersync/matrix.hpp"

namespace hypersync {

enum class MapKind { identity, zero, linear, sine, cosine, expsin, logistic };

/// Vertex-local map family. Scalar kinds act componentwise on k-vectors;
/// coupled k-dimensional maps are available through the matrix-linear kind
/// (row convention, x -> x A).
///
/// Kinds and their documented Lipschitz bounds (Euclidean norm):
///   identity        x -> x                      L = 1
///   zero            x -> 0                      L = 0
///   linear(a)       x -> a x  (or x A)          L = |a| (resp. ||A||_2)
///   sine(q)         x -> q sin(-x)              L = |q|
///   cosine(p)       x -> p cos(-x)              L = |p|
///   expsin(q)       x -> q e^{sin x}            L = |q| sqrt(s) e^s, s = (sqrt5-1)/2
///   logistic(r)     x -> r x (1-x)              L = |r| on the invariant domain [0,1]
class MapSpec {
  public:
    static MapSpec identity();
    static MapSpec zero();
    static MapSpec linear(double a);
    static MapSpec linear_matrix(Matrix a);
    static MapSpec sine(double q);
    static MapSpec cosine(double p);
    static MapSpec expsin(double q);
    static MapSpec logistic(double r);

    /// sup_x |cos x e^{sin x}|, the sharp slope factor of the expsin kind.
    static double expsin_slope_factor();

    MapKind kind() const { return kind_; }
    double param() const { return param_; }
    bool is_matrix_linear() const { return kind_ == MapKind::linear && coupling_.rows() > 0; }
    const Matrix& coupling() const { return coupling_; }

    double scalar(double x) const;
    double derivative(double x) const;

    /// Map one vertex state (k-vector) in place of out.
    void apply_row(std::span<const double> in, std::span<double> out) const;

    /// Map an n x k row-major state block, vertexwise.
    std::vector<double> apply_state(std::span<const double> x, int n, int k) const;

    /// k x k Jacobian at an on-manifold point s (diagonal for scalar kinds).
    Matrix jacobian(std::span<const double> s) const;

    double lipschitz_constant() const;

    /// Signed sup of the derivative, the one-sided slope bound k(I, f).
    double slope_bound() const;

    std::string name() const;

  private:
    MapSpec(MapKind kind, double param) : kind_(kind), param_(param) {}

    MapKind kind_;
    double param_;
    Matrix coupling_;  // only for matrix-linear
};

MapKind map_kind_from_name(const std::string& name);
std::string map_kind_name(MapKind kind);

}  // namespace hypersync
