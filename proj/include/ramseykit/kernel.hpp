#pragma once

#include <string>
#include <vector>

#include "ramseykit/exact.hpp"
#include "ramseykit/graph.hpp"
#include "ramseykit/pattern.hpp"

namespace rk {

enum class Mode { exact, floating };

// Finite probability space: atoms with nonnegative weights summing to 1.
// Exact spaces keep rational weights alongside the double mirror.
struct FiniteSpace {
    int atom_count = 0;
    Mode mode = Mode::floating;
    std::vector<Rat> weights_q;     // exact mode only
    std::vector<double> weights;    // always populated

    static FiniteSpace uniform_exact(int m);
    static FiniteSpace uniform_float(int m);
    static FiniteSpace from_weights_exact(std::vector<Rat> w);
    static FiniteSpace from_weights_float(std::vector<double> w);
};

// Symmetric step function on a finite space, values in [-1,1]; graphons are
// the [0,1]-valued case. Exact kernels carry rational values plus a double
// mirror, so float-path operations work on either mode.
class StepKernel {
public:
    static StepKernel exact(FiniteSpace space, std::vector<Rat> values, bool graphon);
    static StepKernel floating(FiniteSpace space, std::vector<double> values, bool graphon);

    int atom_count() const { return space_.atom_count; }
    Mode mode() const { return mode_; }
    bool is_graphon() const { return graphon_; }
    const FiniteSpace& space() const { return space_; }

    double value(int i, int j) const { return vd_[static_cast<std::size_t>(i) * space_.atom_count + j]; }
    const Rat& value_q(int i, int j) const;
    const double* value_row(int i) const { return vd_.data() + static_cast<std::size_t>(i) * space_.atom_count; }
    const std::vector<double>& values_d() const { return vd_; }
    const std::vector<Rat>& values_q() const { return vq_; }

    double sup_norm() const;
    double mean() const;     // t_{K_2}
    Rat mean_q() const;

private:
    FiniteSpace space_;
    Mode mode_ = Mode::floating;
    bool graphon_ = false;
    std::vector<Rat> vq_;
    std::vector<double> vd_;
};

// W_G: uniform space on the vertices, 0/1 values, zero diagonal.
StepKernel embed_graph(const SimpleGraph& g, Mode mode = Mode::exact);

// f = W - p pointwise; requires a graphon and p in (0,1). The double overload
// demotes exact kernels to float first.
StepKernel center(const StepKernel& w, const Rat& p);
StepKernel center(const StepKernel& w, double p);

// Drop rational data, keeping the double mirror.
StepKernel to_float(const StepKernel& w);

struct DensityBudget {
    double max_assignments = 5e8;   // float-path atom_count^v cap
    double max_exact_assignments = 2e7;  // generic-rational fallback cap
};

// H-density: expectation over independent atom assignments of the product of
// kernel values across the edges of the pattern.
double density(const PatternGraph& h, const StepKernel& w, const DensityBudget& budget = {});
Rat density_exact(const PatternGraph& h, const StepKernel& w, const DensityBudget& budget = {});

// Codegree W_x = E_y prod_i W(x_i, y).
double codegree(const StepKernel& w, const std::vector<int>& xs);
Rat codegree_exact(const StepKernel& w, const std::vector<int>& xs);

// t_{K_{a,b}} via the codegree-power expansion: cost atoms^min(a,b) * atoms
// instead of atoms^(a+b).
double kab_density(int a, int b, const StepKernel& w, const DensityBudget& budget = {});
Rat kab_density_exact(int a, int b, const StepKernel& w, const DensityBudget& budget = {});

// JSON kernel file format:
//   {"weights": [...], "values": [[...]], "mode": "exact"|"float"}
// with rationals written "p/q" in exact mode.
StepKernel kernel_from_json(const std::string& text);
std::string kernel_to_json(const StepKernel& w);

}  // namespace rk
