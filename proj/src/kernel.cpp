#include "ramseykit/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ramseykit/simd.hpp"

#include <json.hpp>

namespace rk {

namespace {
using i128 = __int128;

BigInt bigint_from_i128(i128 v) {
    bool neg = v < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    BigInt lo(static_cast<unsigned long long>(mag), 1);
    BigInt hi(static_cast<unsigned long long>(mag >> 64), 1);
    BigInt r = hi.shifted_left(64) + lo;
    if (neg && !r.is_zero()) r.negate();
    return r;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t g = std::gcd(a, b);
    return a / g * b;
}

}  // namespace

FiniteSpace FiniteSpace::uniform_exact(int m) {
    std::vector<Rat> w(static_cast<std::size_t>(m), Rat(1, m));
    return from_weights_exact(std::move(w));
}

FiniteSpace FiniteSpace::uniform_float(int m) {
    std::vector<double> w(static_cast<std::size_t>(m), 1.0 / m);
    return from_weights_float(std::move(w));
}

FiniteSpace FiniteSpace::from_weights_exact(std::vector<Rat> w) {
    if (w.empty()) throw DomainError("space needs at least one atom");
    Rat sum(0);
    for (const auto& x : w) {
        if (x.sign() < 0) throw DomainError("negative atom weight");
        sum += x;
    }
    if (sum != Rat(1)) throw DomainError("atom weights must sum to 1");
    FiniteSpace s;
    s.atom_count = static_cast<int>(w.size());
    s.mode = Mode::exact;
    s.weights.reserve(w.size());
    for (const auto& x : w) s.weights.push_back(x.to_double());
    s.weights_q = std::move(w);
    return s;
}

FiniteSpace FiniteSpace::from_weights_float(std::vector<double> w) {
    if (w.empty()) throw DomainError("space needs at least one atom");
    double sum = 0;
    for (double x : w) {
        if (x < 0) throw DomainError("negative atom weight");
        sum += x;
    }
    if (std::fabs(sum - 1.0) > 1e-12) throw DomainError("atom weights must sum to 1");
    FiniteSpace s;
    s.atom_count = static_cast<int>(w.size());
    s.mode = Mode::floating;
    s.weights = std::move(w);
    return s;
}

StepKernel StepKernel::exact(FiniteSpace space, std::vector<Rat> values, bool graphon) {
    if (space.mode != Mode::exact) throw UsageError("exact kernel needs an exact space");
    int m = space.atom_count;
    if (values.size() != static_cast<std::size_t>(m) * m) throw DomainError("value matrix size mismatch");
    const Rat one(1), zero(0), minus_one(-1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            if (values[static_cast<std::size_t>(i) * m + j] != values[static_cast<std::size_t>(j) * m + i])
                throw DomainError("kernel values not symmetric");
    for (const auto& v : values) {
        if (v > one || v < minus_one) throw DomainError("kernel sup-norm above 1");
        if (graphon && v < zero) throw DomainError("graphon value below 0");
    }
    StepKernel k;
    k.space_ = std::move(space);
    k.mode_ = Mode::exact;
    k.graphon_ = graphon;
    k.vd_.reserve(values.size());
    for (const auto& v : values) k.vd_.push_back(v.to_double());
    k.vq_ = std::move(values);
    return k;
}

StepKernel StepKernel::floating(FiniteSpace space, std::vector<double> values, bool graphon) {
    int m = space.atom_count;
    if (values.size() != static_cast<std::size_t>(m) * m) throw DomainError("value matrix size mismatch");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            if (values[static_cast<std::size_t>(i) * m + j] != values[static_cast<std::size_t>(j) * m + i])
                throw DomainError("kernel values not symmetric");
    for (double v : values) {
        if (std::fabs(v) > 1.0 + 1e-12) throw DomainError("kernel sup-norm above 1");
        if (graphon && (v < -1e-12 || v > 1.0 + 1e-12)) throw DomainError("graphon value outside [0,1]");
    }
    StepKernel k;
    k.space_ = std::move(space);
    k.space_.mode = Mode::floating;
    k.mode_ = Mode::floating;
    k.graphon_ = graphon;
    k.vd_ = std::move(values);
    return k;
}

const Rat& StepKernel::value_q(int i, int j) const {
    if (mode_ != Mode::exact) throw UsageError("rational values only on exact kernels");
    return vq_[static_cast<std::size_t>(i) * space_.atom_count + j];
}

double StepKernel::sup_norm() const {
    double s = 0;
    for (double v : vd_) s = std::max(s, std::fabs(v));
    return s;
}

double StepKernel::mean() const {
    int m = space_.atom_count;
    double acc = 0;
    for (int i = 0; i < m; ++i) {
        double rowacc = 0;
        for (int j = 0; j < m; ++j) rowacc += space_.weights[j] * value(i, j);
        acc += space_.weights[i] * rowacc;
    }
    return acc;
}

Rat StepKernel::mean_q() const {
    if (mode_ != Mode::exact) throw UsageError("mean_q on float kernel");
    int m = space_.atom_count;
    Rat acc(0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            acc += space_.weights_q[i] * space_.weights_q[j] * value_q(i, j);
    return acc;
}

StepKernel embed_graph(const SimpleGraph& g, Mode mode) {
    int n = g.vertex_count();
    if (n < 1) throw DomainError("embed_graph needs at least one vertex");
    if (mode == Mode::exact) {
        if (n > 512) throw SizeError("exact graph embedding capped at 512 vertices");
        std::vector<Rat> values(static_cast<std::size_t>(n) * n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (g.has_edge(i, j)) values[static_cast<std::size_t>(i) * n + j] = Rat(1);
        return StepKernel::exact(FiniteSpace::uniform_exact(n), std::move(values), true);
    }
    if (n > 4096) throw SizeError("float graph embedding capped at 4096 vertices");
    std::vector<double> values(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) values[static_cast<std::size_t>(i) * n + j] = 1.0;
    return StepKernel::floating(FiniteSpace::uniform_float(n), std::move(values), true);
}

StepKernel center(const StepKernel& w, const Rat& p) {
    if (!w.is_graphon()) throw UsageError("center expects a graphon");
    if (w.mode() != Mode::exact) throw UsageError("rational centering needs an exact kernel");
    if (p <= Rat(0) || p >= Rat(1)) throw DomainError("centering density must lie in (0,1)");
    std::vector<Rat> values = w.values_q();
    for (auto& v : values) v -= p;
    return StepKernel::exact(w.space(), std::move(values), false);
}

StepKernel to_float(const StepKernel& w) {
    if (w.mode() == Mode::floating) return w;
    FiniteSpace s;
    s.atom_count = w.atom_count();
    s.mode = Mode::floating;
    s.weights = w.space().weights;
    return StepKernel::floating(std::move(s), w.values_d(), w.is_graphon());
}

StepKernel center(const StepKernel& w, double p) {
    if (!w.is_graphon()) throw UsageError("center expects a graphon");
    if (!(p > 0.0 && p < 1.0)) throw DomainError("centering density must lie in (0,1)");
    StepKernel base = to_float(w);
    std::vector<double> values = base.values_d();
    for (auto& v : values) v -= p;
    FiniteSpace s = base.space();
    return StepKernel::floating(std::move(s), std::move(values), false);
}

// ---------------------------------------------------------------------------
// Density enumeration.

namespace {

// Pattern preprocessed for assignment enumeration: isolated vertices dropped
// (each contributes a factor of exactly 1), remaining vertices ordered so
// that zero partial products prune as early as possible.
struct EnumPlan {
    int v = 0;                                   // vertices after dropping isolated
    std::vector<std::vector<int>> earlier;       // per position: earlier positions adjacent to it
    bool trivial = false;                        // no edges at all
};

EnumPlan make_plan(const PatternGraph& h) {
    EnumPlan plan;
    int n = h.vertex_count();
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (h.degree(v) > 0) keep.push_back(v);
    plan.v = static_cast<int>(keep.size());
    if (plan.v == 0) {
        plan.trivial = true;
        return plan;
    }
    // BFS order per component starting from a max-degree vertex.
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    auto degree_cmp = [&](int a, int b) { return h.degree(a) > h.degree(b); };
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end(), degree_cmp);
    for (int s : sorted) {
        if (placed[s]) continue;
        std::vector<int> queue{s};
        placed[s] = true;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            order.push_back(v);
            for (int u : sorted)
                if (!placed[u] && h.has_edge(u, v)) {
                    placed[u] = true;
                    queue.push_back(u);
                }
        }
    }
    plan.earlier.resize(static_cast<std::size_t>(plan.v));
    for (int pos = 0; pos < plan.v; ++pos)
        for (int prev = 0; prev < pos; ++prev)
            if (h.has_edge(order[pos], order[prev])) plan.earlier[pos].push_back(prev);
    return plan;
}

struct FloatDensityRec {
    const EnumPlan& plan;
    const StepKernel& w;
    int m;
    std::vector<int> assign;
    std::vector<const double*> rows;
    double acc = 0.0;

    FloatDensityRec(const EnumPlan& p, const StepKernel& kernel)
        : plan(p), w(kernel), m(kernel.atom_count()), assign(static_cast<std::size_t>(p.v)) {}

    void run(int pos, double partial) {
        if (pos == plan.v - 1) {
            rows.clear();
            for (int e : plan.earlier[pos]) rows.push_back(w.value_row(assign[e]));
            acc += partial * simd::weighted_product_sum(rows.data(), static_cast<int>(rows.size()),
                                                        w.space().weights.data(), static_cast<std::size_t>(m));
            return;
        }
        for (int a = 0; a < m; ++a) {
            double p2 = partial * w.space().weights[a];
            for (int e : plan.earlier[pos]) {
                p2 *= w.value(assign[e], a);
                if (p2 == 0.0) break;
            }
            if (p2 == 0.0) continue;
            assign[pos] = a;
            run(pos + 1, p2);
        }
    }
};

// Scaled-integer exact path: values as v*D, weights as w*Wd, both int64;
// accumulate the assignment sum in 128 bits and divide once at the end.
struct ScaledKernel {
    bool ok = false;
    std::uint64_t D = 1, Wd = 1;
    std::vector<long long> sv;   // m*m scaled values
    std::vector<long long> wn;   // m scaled weights
    long long max_abs_v = 0, max_w = 0;
};

ScaledKernel scale_kernel(const StepKernel& w) {
    ScaledKernel s;
    if (w.mode() != Mode::exact) return s;
    int m = w.atom_count();
    std::uint64_t D = 1, Wd = 1;
    for (const auto& v : w.values_q()) {
        if (!v.den().fits_int64()) return s;
        D = lcm_u64(D, static_cast<std::uint64_t>(v.den().to_int64()));
        if (D > (std::uint64_t(1) << 32)) return s;
    }
    for (const auto& x : w.space().weights_q) {
        if (!x.den().fits_int64()) return s;
        Wd = lcm_u64(Wd, static_cast<std::uint64_t>(x.den().to_int64()));
        if (Wd > (std::uint64_t(1) << 32)) return s;
    }
    s.D = D;
    s.Wd = Wd;
    s.sv.reserve(static_cast<std::size_t>(m) * m);
    for (const auto& v : w.values_q()) {
        Rat scaled = v * Rat(static_cast<long long>(D));
        long long iv = scaled.num().to_int64();  // denominator is 1 by construction
        s.sv.push_back(iv);
        s.max_abs_v = std::max(s.max_abs_v, std::llabs(iv));
    }
    for (const auto& x : w.space().weights_q) {
        Rat scaled = x * Rat(static_cast<long long>(Wd));
        long long iw = scaled.num().to_int64();
        s.wn.push_back(iw);
        s.max_w = std::max(s.max_w, iw);
    }
    s.ok = true;
    return s;
}

struct ExactDensityRec {
    const EnumPlan& plan;
    const ScaledKernel& sk;
    int m;
    std::vector<int> assign;
    i128 acc = 0;

    ExactDensityRec(const EnumPlan& p, const ScaledKernel& s, int atoms)
        : plan(p), sk(s), m(atoms), assign(static_cast<std::size_t>(p.v)) {}

    void run(int pos, i128 partial) {
        if (pos == plan.v) {
            acc += partial;
            return;
        }
        for (int a = 0; a < m; ++a) {
            i128 p2 = partial * sk.wn[a];
            for (int e : plan.earlier[pos]) {
                p2 *= sk.sv[static_cast<std::size_t>(assign[e]) * m + a];
                if (p2 == 0) break;
            }
            if (p2 == 0) continue;
            assign[pos] = a;
            run(pos + 1, p2);
        }
    }
};

// Generic rational fallback for exact kernels whose scaled form overflows.
struct RatDensityRec {
    const EnumPlan& plan;
    const StepKernel& w;
    int m;
    std::vector<int> assign;
    Rat acc;

    RatDensityRec(const EnumPlan& p, const StepKernel& kernel)
        : plan(p), w(kernel), m(kernel.atom_count()), assign(static_cast<std::size_t>(p.v)), acc(0) {}

    void run(int pos, const Rat& partial) {
        if (pos == plan.v) {
            acc += partial;
            return;
        }
        for (int a = 0; a < m; ++a) {
            Rat p2 = partial * w.space().weights_q[a];
            for (int e : plan.earlier[pos]) p2 *= w.value_q(assign[e], a);
            if (p2.is_zero()) continue;
            assign[pos] = a;
            run(pos + 1, p2);
        }
    }
};

int plan_edge_count(const EnumPlan& plan) {
    int e = 0;
    for (const auto& lst : plan.earlier) e += static_cast<int>(lst.size());
    return e;
}

void check_float_budget(int v, int m, const DensityBudget& budget) {
    if (v > 0 && std::pow(static_cast<double>(m), v) > budget.max_assignments)
        throw BudgetError("density: atom_count^v(H) exceeds work budget");
}

}  // namespace

double density(const PatternGraph& h, const StepKernel& w, const DensityBudget& budget) {
    EnumPlan plan = make_plan(h);
    if (plan.trivial) return 1.0;
    check_float_budget(plan.v, w.atom_count(), budget);
    FloatDensityRec rec(plan, w);
    rec.run(0, 1.0);
    return rec.acc;
}

Rat density_exact(const PatternGraph& h, const StepKernel& w, const DensityBudget& budget) {
    if (w.mode() != Mode::exact) throw UsageError("density_exact needs an exact kernel");
    EnumPlan plan = make_plan(h);
    if (plan.trivial) return Rat(1);
    int m = w.atom_count();
    int e = plan_edge_count(plan);
    ScaledKernel sk = scale_kernel(w);
    if (sk.ok) {
        long double bound = 1.0L;
        for (int i = 0; i < e; ++i) bound *= static_cast<long double>(std::max<long long>(sk.max_abs_v, 1));
        for (int i = 0; i < plan.v; ++i) bound *= static_cast<long double>(std::max<long long>(sk.max_w, 1)) * m;
        if (bound < 1e36L) {
            ExactDensityRec rec(plan, sk, m);
            rec.run(0, 1);
            BigInt den = BigInt::pow(BigInt(static_cast<long long>(sk.D)), static_cast<unsigned>(e)) *
                         BigInt::pow(BigInt(static_cast<long long>(sk.Wd)), static_cast<unsigned>(plan.v));
            return Rat(bigint_from_i128(rec.acc), den);
        }
    }
    if (plan.v > 0 && std::pow(static_cast<double>(m), plan.v) > budget.max_exact_assignments)
        throw BudgetError("density_exact: instance exceeds the exact-mode work budget");
    RatDensityRec rec(plan, w);
    rec.run(0, Rat(1));
    return rec.acc;
}

double codegree(const StepKernel& w, const std::vector<int>& xs) {
    if (xs.empty()) throw UsageError("codegree needs a nonempty tuple");
    std::vector<const double*> rows;
    rows.reserve(xs.size());
    for (int x : xs) {
        if (x < 0 || x >= w.atom_count()) throw DomainError("codegree atom out of range");
        rows.push_back(w.value_row(x));
    }
    return simd::weighted_product_sum(rows.data(), static_cast<int>(rows.size()), w.space().weights.data(),
                                      static_cast<std::size_t>(w.atom_count()));
}

Rat codegree_exact(const StepKernel& w, const std::vector<int>& xs) {
    if (xs.empty()) throw UsageError("codegree needs a nonempty tuple");
    if (w.mode() != Mode::exact) throw UsageError("codegree_exact needs an exact kernel");
    int m = w.atom_count();
    Rat acc(0);
    for (int y = 0; y < m; ++y) {
        Rat p = w.space().weights_q[y];
        for (int x : xs) p *= w.value_q(x, y);
        acc += p;
    }
    return acc;
}

namespace {

struct KabFloatRec {
    const StepKernel& w;
    int m, a, b;
    std::vector<int> tuple;
    std::vector<const double*> rows;
    double acc = 0.0;

    KabFloatRec(const StepKernel& kernel, int aa, int bb)
        : w(kernel), m(kernel.atom_count()), a(aa), b(bb), tuple(static_cast<std::size_t>(aa)) {}

    void run(int pos, double partial) {
        if (pos == a) {
            rows.clear();
            for (int x : tuple) rows.push_back(w.value_row(x));
            double wx = simd::weighted_product_sum(rows.data(), a, w.space().weights.data(),
                                                   static_cast<std::size_t>(m));
            double power = 1.0;
            for (int i = 0; i < b; ++i) power *= wx;
            acc += partial * power;
            return;
        }
        for (int x = 0; x < m; ++x) {
            tuple[pos] = x;
            run(pos + 1, partial * w.space().weights[x]);
        }
    }
};

struct KabExactRec {
    const StepKernel& w;
    const ScaledKernel& sk;
    int m, a, b;
    std::vector<int> tuple;
    i128 acc = 0;

    KabExactRec(const StepKernel& kernel, const ScaledKernel& s, int aa, int bb)
        : w(kernel), sk(s), m(kernel.atom_count()), a(aa), b(bb), tuple(static_cast<std::size_t>(aa)) {}

    void run(int pos, i128 wpartial) {
        if (pos == a) {
            i128 s = 0;  // scaled codegree numerator: sum_y wn[y] prod_i sv[x_i][y]
            for (int y = 0; y < m; ++y) {
                i128 p = sk.wn[y];
                for (int i = 0; i < a && p != 0; ++i) p *= sk.sv[static_cast<std::size_t>(tuple[i]) * m + y];
                s += p;
            }
            i128 power = 1;
            for (int i = 0; i < b; ++i) power *= s;
            acc += wpartial * power;
            return;
        }
        for (int x = 0; x < m; ++x) {
            tuple[pos] = x;
            run(pos + 1, wpartial * sk.wn[x]);
        }
    }
};

}  // namespace

double kab_density(int a, int b, const StepKernel& w, const DensityBudget& budget) {
    if (a < 1 || b < 1) throw UsageError("kab_density needs positive side sizes");
    if (a > b) std::swap(a, b);  // t_{K_{a,b}} is symmetric; enumerate the small side
    int m = w.atom_count();
    if (std::pow(static_cast<double>(m), a + 1) > budget.max_assignments)
        throw BudgetError("kab_density: work budget exceeded");
    KabFloatRec rec(w, a, b);
    rec.run(0, 1.0);
    return rec.acc;
}

Rat kab_density_exact(int a, int b, const StepKernel& w, const DensityBudget& budget) {
    if (a < 1 || b < 1) throw UsageError("kab_density needs positive side sizes");
    if (w.mode() != Mode::exact) throw UsageError("kab_density_exact needs an exact kernel");
    if (a > b) std::swap(a, b);
    int m = w.atom_count();
    if (std::pow(static_cast<double>(m), a + 1) > budget.max_exact_assignments)
        throw BudgetError("kab_density_exact: work budget exceeded");
    ScaledKernel sk = scale_kernel(w);
    if (!sk.ok) throw BudgetError("kab_density_exact: kernel denominators too large for the scaled path");
    long double sbound = static_cast<long double>(m) * sk.max_w;
    for (int i = 0; i < a; ++i) sbound *= static_cast<long double>(std::max<long long>(sk.max_abs_v, 1));
    long double total = std::pow(static_cast<long double>(m), a);
    for (int i = 0; i < a; ++i) total *= static_cast<long double>(std::max<long long>(sk.max_w, 1));
    for (int i = 0; i < b; ++i) total *= sbound;
    if (total >= 1e36L) throw BudgetError("kab_density_exact: scaled accumulator would overflow");
    KabExactRec rec(w, sk, a, b);
    rec.run(0, 1);
    // tuple weights: Wd^a; each codegree: Wd * D^a, raised to b.
    BigInt den = BigInt::pow(BigInt(static_cast<long long>(sk.Wd)), static_cast<unsigned>(a + b)) *
                 BigInt::pow(BigInt(static_cast<long long>(sk.D)), static_cast<unsigned>(a * b));
    return Rat(bigint_from_i128(rec.acc), den);
}

// ---------------------------------------------------------------------------

StepKernel kernel_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::string mode = j.value("mode", "float");
    auto wj = j.at("weights");
    auto vj = j.at("values");
    int m = static_cast<int>(wj.size());
    if (static_cast<int>(vj.size()) != m) throw DomainError("kernel json: values row count mismatch");
    bool graphon = j.value("graphon", false);
    auto parse_rat = [](const nlohmann::json& x) {
        if (x.is_string()) return Rat::from_string(x.get<std::string>());
        if (x.is_number_integer()) return Rat(x.get<long long>());
        throw DomainError("kernel json: exact mode needs integer or \"p/q\" entries");
    };
    if (mode == "exact") {
        std::vector<Rat> weights, values;
        for (const auto& x : wj) weights.push_back(parse_rat(x));
        for (const auto& rowj : vj) {
            if (static_cast<int>(rowj.size()) != m) throw DomainError("kernel json: ragged value matrix");
            for (const auto& x : rowj) values.push_back(parse_rat(x));
        }
        return StepKernel::exact(FiniteSpace::from_weights_exact(std::move(weights)), std::move(values), graphon);
    }
    if (mode != "float") throw DomainError("kernel json: mode must be \"exact\" or \"float\"");
    std::vector<double> weights, values;
    for (const auto& x : wj) weights.push_back(x.get<double>());
    for (const auto& rowj : vj) {
        if (static_cast<int>(rowj.size()) != m) throw DomainError("kernel json: ragged value matrix");
        for (const auto& x : rowj) values.push_back(x.get<double>());
    }
    return StepKernel::floating(FiniteSpace::from_weights_float(std::move(weights)), std::move(values), graphon);
}

std::string kernel_to_json(const StepKernel& w) {
    nlohmann::json j;
    int m = w.atom_count();
    if (w.mode() == Mode::exact) {
        j["mode"] = "exact";
        nlohmann::json weights = nlohmann::json::array();
        for (const auto& x : w.space().weights_q) weights.push_back(x.to_string());
        nlohmann::json values = nlohmann::json::array();
        for (int i = 0; i < m; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int jj = 0; jj < m; ++jj) row.push_back(w.value_q(i, jj).to_string());
            values.push_back(std::move(row));
        }
        j["weights"] = std::move(weights);
        j["values"] = std::move(values);
    } else {
        j["mode"] = "float";
        j["weights"] = w.space().weights;
        nlohmann::json values = nlohmann::json::array();
        for (int i = 0; i < m; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int jj = 0; jj < m; ++jj) row.push_back(w.value(i, jj));
            values.push_back(std::move(row));
        }
        j["values"] = std::move(values);
    }
    j["graphon"] = w.is_graphon();
    return j.dump();
}

}  // namespace rk
