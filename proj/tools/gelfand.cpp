// Command-line front end: branching tables, wells, verification sweeps and
// MVOP runs. Exit codes: 0 ok, 1 check failed, 2 usage, 3 cap, 4 numerical.
#include "gelfand/branching.hpp"
#include "gelfand/mvop.hpp"
#include "gelfand/wells.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gelfand;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kCap = 3, kNumerical = 4 };

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Common {
    std::string format = "json";
    std::string output;
    std::uint64_t dim_cap = kDefaultDimCap;
    bool eps = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

Rat parse_rat(const std::string& s) {
    const auto parts = split(s, '/');
    try {
        size_t used = 0;
        if (parts.size() == 1) {
            const long long v = std::stoll(parts[0], &used);
            if (used != parts[0].size()) throw usage_error("");
            return Rat(v);
        }
        if (parts.size() == 2) {
            const long long n = std::stoll(parts[0], &used);
            size_t used2 = 0;
            const long long d = std::stoll(parts[1], &used2);
            if (used != parts[0].size() || used2 != parts[1].size() || d == 0) throw usage_error("");
            return Rat(n, d);
        }
    } catch (const std::logic_error&) {
    }
    throw usage_error("not a number: '" + s + "'");
}

// Doubled epsilon coordinates from "a,b,c": fundamental coordinates (padded
// with zero central coordinates), or epsilon coordinates with --eps.
IVec parse_weight(const RootSystem& rs, const std::string& text, bool eps) {
    std::vector<Rat> v;
    for (const auto& s : split(text, ',')) v.push_back(parse_rat(s));
    if (eps) {
        if (static_cast<int>(v.size()) != rs.dim)
            throw usage_error("expected " + std::to_string(rs.dim) + " epsilon coordinates for " + rs.label);
        try {
            return Weight::from_eps(v, rs.tag).d;
        } catch (const lattice_error&) {
            throw usage_error("'" + text + "' is not in the weight lattice of " + rs.label);
        }
    }
    const size_t n = rs.fundamental.size() + rs.central.size();
    if (v.size() != rs.fundamental.size() && v.size() != n)
        throw usage_error("expected " + std::to_string(rs.fundamental.size()) + " fundamental coordinates for " +
                          rs.label);
    std::vector<long long> c;
    for (const auto& r : v) {
        if (r.denominator() != 1) throw usage_error("fundamental coordinates must be integers");
        c.push_back(r.numerator());
    }
    c.resize(n, 0);
    return from_fundamental(rs, c).d;
}

ojson fund_json(const RootSystem& rs, const IVec& v) { return to_fundamental(rs, rs.weight(v)); }

std::string fund_str(const RootSystem& rs, const IVec& v) {
    std::string s;
    for (auto c : to_fundamental(rs, rs.weight(v))) s += (s.empty() ? "" : " ") + std::to_string(c);
    return s;
}

void emit(const Common& c, const ojson& doc, const std::string& csv) {
    std::ofstream file;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file) throw usage_error("cannot write " + c.output);
    }
    std::ostream& out = c.output.empty() ? std::cout : file;
    if (c.format == "csv")
        out << csv;
    else
        out << doc.dump(2) << '\n';
}

std::vector<IVec> face_weights(const PairDescriptor& p, int bound) {
    std::vector<IVec> out;
    std::vector<long long> f(p.K.rank, 0);
    while (true) {
        if (p.faces.admits(f, p.K.rank)) {
            auto c = f;
            c.resize(p.K.fundamental.size() + p.K.central.size(), 0);
            out.push_back(from_fundamental(p.K, c).d);
        }
        int i = 0;
        while (i < p.K.rank && f[i] == bound) f[i++] = 0;
        if (i == p.K.rank) break;
        ++f[i];
    }
    return out;
}

// mu from --mu, else every face weight with coordinates <= mu_max.
std::vector<IVec> mu_list(const PairDescriptor& p, const std::string& mu, int mu_max, bool eps) {
    if (mu.empty()) return face_weights(p, mu_max);
    const IVec m = parse_weight(p.K, mu, eps);
    if (!is_dominant(p.K, p.K.weight(m))) throw usage_error("mu is not K-dominant");
    if (!p.faces.admits(to_fundamental(p.K, p.K.weight(m)), p.K.rank))
        throw usage_error("mu is not on a multiplicity free face of " + p.id);
    return {m};
}

// ------------------------------------------------------------------ branch

struct BranchConfig {
    std::string pair;
    std::vector<std::string> lambdas;
    bool oracle = false;
};

int cmd_branch(const BranchConfig& cfg, const Common& c) {
    const auto p = make_pair_descriptor(cfg.pair);
    KostantBrancher kb(p, static_cast<int>(p.chambers.size()) - 1);
    ojson docs = ojson::array();
    std::string csv = "pair,lambda,mu,mult\n";
    bool mismatch = false;
    for (const auto& text : cfg.lambdas) {
        const IVec lambda = parse_weight(p.G, text, c.eps);
        if (!is_dominant(p.G, p.G.weight(lambda))) throw usage_error("lambda " + text + " is not G-dominant");
        const auto dim = weyl_dim(p.G, p.G.weight(lambda));
        if (dim > c.dim_cap)
            throw cap_exceeded("dim V_lambda = " + std::to_string(dim) + " exceeds the cap " +
                               std::to_string(c.dim_cap));
        const auto table = kostant_table(kb, lambda, c.dim_cap);
        if (table.dim_sum(p.K) != static_cast<long long>(dim))
            throw std::logic_error("dimension conservation failed for lambda " + text);
        ojson doc;
        doc["pair"] = p.id;
        doc["lambda"] = fund_json(p.G, lambda);
        doc["dim"] = dim;
        doc["entries"] = ojson::array();
        for (const auto& [mu, m] : table.entries) {
            doc["entries"].push_back({{"mu", fund_json(p.K, mu)}, {"mult", m}, {"dim", weyl_dim(p.K, p.K.weight(mu))}});
            csv += p.id + "," + fund_str(p.G, lambda) + "," + fund_str(p.K, mu) + "," + std::to_string(m) + "\n";
        }
        if (cfg.oracle) {
            const bool agree = branch_oracle(p, lambda, c.dim_cap).entries == table.entries;
            doc["oracle"] = agree ? "agree" : "mismatch";
            mismatch |= !agree;
        }
        docs.push_back(doc);
    }
    emit(c, docs.size() == 1 ? docs[0] : docs, csv);
    if (mismatch) std::cerr << "oracle mismatch\n";
    return mismatch ? kFailed : kOk;
}

// ------------------------------------------------------------------ well

struct WellConfig {
    std::string pair, mu;
    int degree = 2;
};

int cmd_well(const WellConfig& cfg, const Common& c) {
    const auto p = make_pair_descriptor(cfg.pair);
    if (cfg.degree < 0) throw usage_error("--degree must be non-negative");
    const IVec mu = mu_list(p, cfg.mu, 0, c.eps).front();
    WellContext ctx(p);
    const auto well = compute_well(ctx, mu);
    ojson doc;
    doc["pair"] = p.id;
    doc["mu"] = fund_json(p.K, mu);
    doc["lambda_sph"] = fund_json(p.G, p.lambda_sph);
    doc["bottom"] = ojson::array();
    for (const auto& b : well.bottom) doc["bottom"].push_back(fund_json(p.G, b));
    doc["spectrum"] = ojson::array();
    std::string csv = "pair,mu,lambda,degree,mult\n";
    for (const auto& b : well.bottom)
        for (int d = 0; d <= cfg.degree; ++d) {
            const IVec l = add(b, scale(d, p.lambda_sph));
            const long long m = ctx.multiplicity(l, mu);
            doc["spectrum"].push_back({{"lambda", fund_json(p.G, l)}, {"degree", d}, {"mult", m}});
            csv += p.id + "," + fund_str(p.K, mu) + "," + fund_str(p.G, l) + "," + std::to_string(d) + "," +
                   std::to_string(m) + "\n";
        }
    doc["closure_failures"] = ojson::array();
    for (const auto& l : well.closure_failures) doc["closure_failures"].push_back(fund_json(p.G, l));
    emit(c, doc, csv);
    return well.closure_failures.empty() ? kOk : kFailed;
}

// ------------------------------------------------------------------ verify

struct VerifyConfig {
    std::string theorem, pair, mu;
    int mu_max = 2, deg_max = 3, bound = 3, steps = 10;
    bool oracle = false;
};

struct Report {
    ojson sweep = ojson::object();
    ojson violations = ojson::array();
};

PairDescriptor pair_for(const VerifyConfig& cfg, const std::string& fixed) {
    if (fixed.empty()) {
        if (cfg.pair.empty()) throw usage_error(cfg.theorem + " needs --pair");
        return make_pair_descriptor(cfg.pair);
    }
    if (!cfg.pair.empty() && make_pair_descriptor(cfg.pair).id != make_pair_descriptor(fixed).id)
        throw usage_error(cfg.theorem + " applies to " + fixed + " only");
    return make_pair_descriptor(fixed);
}

Report verify_degree(const VerifyConfig& cfg, bool eps) {
    const auto p = pair_for(cfg, "");
    WellContext ctx(p);
    Report r;
    long long checked = 0, mus = 0;
    for (const auto& mu : mu_list(p, cfg.mu, cfg.mu_max, eps)) {
        const auto w = compute_well(ctx, mu);
        const auto rep = check_degree_inequality(ctx, w, cfg.deg_max);
        ++mus;
        checked += rep.checked;
        for (const auto& v : rep.violations)
            r.violations.push_back({{"mu", fund_json(p.K, mu)},
                                    {"lambda", fund_json(p.G, v.lambda)},
                                    {"shift", v.shift},
                                    {"d", v.d},
                                    {"d_shifted", v.d_shifted}});
        for (const auto& [l, s] : rep.sandwich_failures)
            r.violations.push_back(
                {{"mu", fund_json(p.K, mu)}, {"lambda", fund_json(p.G, l)}, {"shift", s}, {"kind", "sandwich"}});
        for (const auto& l : w.closure_failures)
            r.violations.push_back({{"mu", fund_json(p.K, mu)}, {"lambda", fund_json(p.G, l)}, {"kind", "closure"}});
    }
    r.sweep = {{"pair", p.id}, {"mu_count", mus}, {"deg_max", cfg.deg_max}, {"pairs_checked", checked}};
    return r;
}

Report verify_bijection(const VerifyConfig& cfg, bool eps) {
    const auto p = pair_for(cfg, "");
    if (!p.M) throw usage_error(p.id + " has no M data");
    Report r;
    long long mus = 0, bottoms = 0;
    for (const auto& mu : mu_list(p, cfg.mu, cfg.mu_max, eps)) {
        const auto rep = check_bottom_bijection(p, mu);
        ++mus;
        bottoms += static_cast<long long>(rep.bottom.size());
        const auto m = fund_json(p.K, mu);
        for (const auto& [a, b] : rep.collisions)
            r.violations.push_back({{"mu", m}, {"kind", "collision"}, {"lambda", fund_json(p.G, a)},
                                    {"other", fund_json(p.G, b)}});
        for (const auto& v : rep.missing)
            r.violations.push_back({{"mu", m}, {"kind", "missing"}, {"nu", fund_json(*p.M, v)}});
        for (const auto& v : rep.outside)
            r.violations.push_back({{"mu", m}, {"kind", "outside"}, {"nu", fund_json(*p.M, v)}});
    }
    r.sweep = {{"pair", p.id}, {"mu_count", mus}, {"bottom_elements", bottoms}};
    return r;
}

std::vector<IVec> g_box(const PairDescriptor& p, int bound) {
    std::vector<IVec> out;
    std::vector<long long> f(p.G.rank, 0);
    while (true) {
        auto c = f;
        c.resize(p.G.fundamental.size() + p.G.central.size(), 0);
        out.push_back(from_fundamental(p.G, c).d);
        int i = 0;
        while (i < p.G.rank && f[i] == bound) f[i++] = 0;
        if (i == p.G.rank) break;
        ++f[i];
    }
    return out;
}

Report verify_stabilization(const VerifyConfig& cfg, bool eps) {
    const auto p = pair_for(cfg, "");
    WellContext ctx(p);
    Report r;
    long long queries = 0;
    int worst = 0;
    for (const auto& mu : mu_list(p, cfg.mu, cfg.mu_max, eps))
        for (const auto& lambda : g_box(p, cfg.bound)) {
            const auto rep = check_stabilization(ctx, lambda, mu, cfg.steps);
            ++queries;
            worst = std::max(worst, rep.bound);
            if (!rep.monotone || (rep.km_value && *rep.km_value != rep.limit)) {
                ojson v = {{"mu", fund_json(p.K, mu)}, {"lambda", fund_json(p.G, lambda)}, {"values", rep.values}};
                if (rep.km_value) v["km_value"] = *rep.km_value;
                r.violations.push_back(v);
            }
        }
    r.sweep = {{"pair", p.id}, {"queries", queries}, {"steps", cfg.steps}, {"max_stabilization_bound", worst}};
    return r;
}

// Spin(7) > G2 checks over k+l+m <= bound and the K-types selected by `mus`.
template <class F> Report spin7_sweep(const VerifyConfig& cfg, F check) {
    const auto p = pair_for(cfg, "spin7-g2");
    Report r;
    long long count = 0;
    for (int k = 0; k <= cfg.bound; ++k)
        for (int l = 0; k + l <= cfg.bound; ++l)
            for (int m = 0; k + l + m <= cfg.bound; ++m) check(p, IVec{k, l, m}, r, count);
    r.sweep = {{"pair", p.id}, {"bound", cfg.bound}, {"mu_max", cfg.mu_max}, {"comparisons", count}};
    return r;
}

Report verify_spin7_formula(const VerifyConfig& cfg) {
    return spin7_sweep(cfg, [&](const PairDescriptor& p, const IVec& klm, Report& r, long long& count) {
        const IVec lambda = from_fundamental(p.G, {klm[0], klm[1], klm[2]}).d;
        std::optional<BranchingTable> table;
        if (cfg.oracle) table = branch_oracle(p, lambda);
        for (int m1 = 0; m1 <= cfg.mu_max; ++m1)
            for (int m2 = 0; m1 + m2 <= cfg.mu_max; ++m2) {
                const IVec mu = from_fundamental(p.K, {m1, m2}).d;
                const long long six = branch_spin7_g2(klm, {m1, m2});
                const long long kos = branch_kostant(p, lambda, mu);
                long long orc = kos;
                if (table) {
                    auto it = table->entries.find(mu);
                    orc = it == table->entries.end() ? 0 : it->second;
                }
                ++count;
                if (six != kos || kos != orc) {
                    ojson v = {{"lambda", klm}, {"mu", {m1, m2}}, {"six_term", six}, {"kostant", kos}};
                    if (table) v["oracle"] = orc;
                    r.violations.push_back(v);
                }
            }
    });
}

Report verify_spin7_window(const VerifyConfig& cfg, bool second_face) {
    return spin7_sweep(cfg, [&](const PairDescriptor&, const IVec& x, Report& r, long long& count) {
        const int k = x[0], l = x[1], m = x[2];
        for (int n = 0; n <= cfg.mu_max; ++n) {
            const IVec mu = second_face ? IVec{0, n} : IVec{n, 0};
            const bool inside = second_face ? std::max(k, l) <= n && n <= std::min(k + l, l + m)
                                            : k + l <= n && n <= k + l + m;
            const long long got = branch_spin7_g2(x, mu);
            ++count;
            if (got != (inside ? 1 : 0))
                r.violations.push_back({{"lambda", x}, {"mu", mu}, {"mult", got}, {"window", inside}});
        }
    });
}

Report verify_sp(const VerifyConfig& cfg) {
    const std::string id = cfg.pair.empty() ? "sp-3" : cfg.pair;
    const auto p = make_pair_descriptor(id);
    if (p.kind != PairKind::sp_n) throw usage_error("thm-5.2 applies to the symplectic pairs only");
    const int n = p.n;
    PartitionFunction sigma(sp_sigma_set(n));
    CharacterCache cache(p.K);
    Report r;
    long long count = 0, tables = 0;
    // Non-increasing sequences with entries <= bound.
    auto partitions = [&](int len) {
        std::vector<std::vector<long long>> out{{}};
        for (int i = 0; i < len; ++i) {
            std::vector<std::vector<long long>> next;
            for (const auto& v : out)
                for (long long x = 0; x <= (v.empty() ? cfg.bound : v.back()); ++x) {
                    auto w = v;
                    w.push_back(x);
                    next.push_back(w);
                }
            out = std::move(next);
        }
        return out;
    };
    std::vector<std::vector<long long>> bs;
    for (const auto& head : partitions(n - 1))
        for (long long bn = 0; bn <= cfg.bound; ++bn) {
            auto b = head;
            b.push_back(bn);
            int support = bn != 0;
            for (int i = 0; i + 1 < n; ++i) support += head[i] != (i + 2 < n ? head[i + 1] : 0);
            if (support <= 2) bs.push_back(b);
        }
    for (const auto& a : partitions(n)) {
        IVec lambda;
        for (auto x : a) lambda.push_back(static_cast<int>(2 * x));
        std::optional<BranchingTable> table;
        if (cfg.oracle) {
            table = branch_oracle(p.G, p.K, p.q, lambda, cache, cfg.oracle ? kDefaultDimCap * 10 : kDefaultDimCap);
            ++tables;
        }
        for (const auto& b : bs) {
            const long long closed = branch_sp_closed(n, a, b);
            const long long lep = branch_sp_lepowsky(n, a, b, &sigma);
            long long orc = lep;
            if (table) {
                IVec mu;
                for (auto x : b) mu.push_back(static_cast<int>(2 * x));
                auto it = table->entries.find(mu);
                orc = it == table->entries.end() ? 0 : it->second;
            }
            ++count;
            if (closed != lep || lep != orc) {
                ojson v = {{"lambda_eps", a}, {"mu_eps", b}, {"closed", closed}, {"lepowsky", lep}};
                if (table) v["oracle"] = orc;
                r.violations.push_back(v);
            }
        }
    }
    r.sweep = {{"pair", p.id}, {"bound", cfg.bound}, {"comparisons", count}, {"oracle_tables", tables}};
    return r;
}

Report verify_f4_bottoms(const VerifyConfig& cfg, bool eps) {
    const auto p = pair_for(cfg, "f4-spin9");
    WellContext ctx(p);
    Report r;
    long long mus = 0, bottoms = 0;
    for (const auto& mu : mu_list(p, cfg.mu, cfg.mu_max, eps)) {
        ++mus;
        const auto closed = bottom_closed_form(p, mu);
        const auto swept = compute_well(ctx, mu).bottom;
        const auto m = fund_json(p.K, mu);
        if (closed != swept) r.violations.push_back({{"mu", m}, {"kind", "bottom differs from sweep"}});
        for (const auto& b : closed) {
            ++bottoms;
            const long long at = ctx.multiplicity(b, mu), below = ctx.multiplicity(sub(b, p.lambda_sph), mu);
            if (at != 1 || below != 0)
                r.violations.push_back({{"mu", m}, {"lambda", fund_json(p.G, b)}, {"mult", at}, {"mult_below", below}});
        }
    }
    r.sweep = {{"pair", p.id}, {"mu_count", mus}, {"bottom_elements", bottoms}};
    return r;
}

int cmd_verify(const VerifyConfig& cfg, const Common& c) {
    if (cfg.mu_max < 0 || cfg.deg_max < 0 || cfg.bound < 0 || cfg.steps < 1) throw usage_error("bounds must be positive");
    Report r;
    const auto& t = cfg.theorem;
    if (t == "thm-1.2")
        r = verify_degree(cfg, c.eps);
    else if (t == "prop-2.3")
        r = verify_bijection(cfg, c.eps);
    else if (t == "prop-2.4")
        r = verify_stabilization(cfg, c.eps);
    else if (t == "thm-4.2")
        r = verify_spin7_formula(cfg);
    else if (t == "cor-4.4")
        r = verify_spin7_window(cfg, false);
    else if (t == "cor-4.5")
        r = verify_spin7_window(cfg, true);
    else if (t == "thm-5.2")
        r = verify_sp(cfg);
    else if (t == "thm-6.4")
        r = verify_f4_bottoms(cfg, c.eps);
    else
        throw usage_error("unknown theorem identifier '" + t + "'");
    ojson doc;
    doc["theorem"] = t;
    doc["sweep"] = r.sweep;
    doc["violations"] = r.violations;
    std::string csv = "theorem,violation\n";
    for (const auto& v : r.violations) csv += t + ",\"" + v.dump() + "\"\n";
    emit(c, doc, csv);
    return r.violations.empty() ? kOk : kFailed;
}

// ------------------------------------------------------------------ mvop

struct MvopConfig {
    std::string file;
    int n_max = 5;
    std::string precision = "quad";
};

template <class R> ojson matrix_json(const mvop::CMatrix<R>& a) {
    ojson rows = ojson::array();
    for (int i = 0; i < a.size(); ++i) {
        ojson row = ojson::array();
        for (int j = 0; j < a.size(); ++j)
            row.push_back({static_cast<double>(a(i, j).real()), static_cast<double>(a(i, j).imag())});
        rows.push_back(row);
    }
    return rows;
}

template <class R> std::string matrix_csv(const std::string& section, int n, int power, const mvop::CMatrix<R>& a) {
    std::ostringstream out;
    out.precision(17);
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            out << section << ',' << n << ',' << power << ',' << i << ',' << j << ','
                << static_cast<double>(a(i, j).real()) << ',' << static_cast<double>(a(i, j).imag()) << '\n';
    return out.str();
}

template <class R> int run_mvop(const mvop::WeightSpec& spec, const MvopConfig& cfg, const Common& c) {
    const auto w = mvop::to_weight<R>(spec);
    const auto eng = mvop::InnerProductEngine<R>::for_degree(w, cfg.n_max);
    const auto seq = mvop::monic_sequence(eng, cfg.n_max);
    ojson doc;
    doc["N"] = spec.N;
    doc["alpha"] = static_cast<double>(spec.alpha);
    doc["beta"] = static_cast<double>(spec.beta);
    doc["precision"] = cfg.precision;
    doc["nodes"] = eng.nodes();
    std::string csv = "section,n,power,row,col,re,im\n";
    doc["monic"] = ojson::array();
    for (int n = 0; n <= cfg.n_max; ++n) {
        ojson coeffs = ojson::array();
        for (int k = 0; k <= n; ++k) {
            coeffs.push_back(matrix_json(seq.M[n].coeff(k)));
            csv += matrix_csv("monic", n, k, seq.M[n].coeff(k));
        }
        doc["monic"].push_back({{"degree", n}, {"coefficients", coeffs}});
    }
    doc["norms"] = ojson::array();
    for (int n = 0; n <= cfg.n_max; ++n) {
        doc["norms"].push_back(matrix_json(seq.norms[n]));
        csv += matrix_csv("norm", n, 0, seq.norms[n]);
    }
    ojson residuals;
    residuals["orthogonality"] = mvop::orthogonality_residual(eng, seq);
    residuals["condition"] = seq.condition;
    doc["recurrence"] = {{"B", ojson::array()}, {"C", ojson::array()}};
    if (cfg.n_max >= 1) {
        const auto rec = mvop::recurrence_coeffs(eng, seq);
        std::vector<double> rr;
        for (size_t n = 0; n < rec.B.size(); ++n) {
            doc["recurrence"]["B"].push_back(matrix_json(rec.B[n]));
            csv += matrix_csv("B", static_cast<int>(n), 0, rec.B[n]);
            if (n > 0) {
                doc["recurrence"]["C"].push_back(matrix_json(rec.C[n]));
                csv += matrix_csv("C", static_cast<int>(n), 0, rec.C[n]);
            }
            rr.push_back(static_cast<double>(rec.residual[n]));
        }
        residuals["recurrence"] = rr;
    }
    doc["residuals"] = residuals;
    emit(c, doc, csv);
    return kOk;
}

int cmd_mvop(const MvopConfig& cfg, const Common& c) {
    if (cfg.n_max < 0) throw usage_error("--n-max must be non-negative");
    std::ifstream in(cfg.file);
    if (!in) throw usage_error("cannot read " + cfg.file);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto spec = mvop::parse_weight_spec(buf.str());
    if (cfg.precision == "double") return run_mvop<double>(spec, cfg, c);
    return run_mvop<mvop::Quad>(spec, cfg, c);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Branching, wells and matrix valued orthogonal polynomials for rank one multiplicity free pairs"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("-o,--output", common.output, "write to a file instead of stdout");
    };
    auto add_weights = [&](CLI::App* sub) {
        sub->add_flag("--eps", common.eps, "weights in epsilon coordinates instead of fundamental coordinates");
        sub->add_option("--dim-cap", common.dim_cap, "largest representation dimension to expand");
    };

    BranchConfig bc;
    auto* branch = app.add_subcommand("branch", "branching table of V_lambda restricted to K");
    branch->add_option("pair", bc.pair, "pair identifier")->required();
    branch->add_option("--lambda", bc.lambdas, "G weight, comma separated; repeatable")->required();
    branch->add_flag("--oracle", bc.oracle, "cross-check against the weight-peeling oracle");
    add_common(branch);
    add_weights(branch);

    WellConfig wc;
    auto* well = app.add_subcommand("well", "bottom and low-degree spectrum of the K-type mu");
    well->add_option("pair", wc.pair, "pair identifier")->required();
    well->add_option("--mu", wc.mu, "K weight, comma separated")->required();
    well->add_option("--degree", wc.degree, "list spectrum points up to this degree");
    add_common(well);
    add_weights(well);

    VerifyConfig vc;
    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("theorem", vc.theorem,
                       "thm-1.2, prop-2.3, prop-2.4, thm-4.2, cor-4.4, cor-4.5, thm-5.2 or thm-6.4")
        ->required();
    verify->footer(
        "Checks:\n"
        "  thm-1.2   |d(lambda + lambda') - d(lambda)| <= 1 for weights lambda' of the spherical representation\n"
        "  prop-2.3  projection to M is a bijection from the bottom onto the M-spectrum\n"
        "  prop-2.4  monotone along lambda_sph with limit the K > M multiplicity\n"
        "  thm-4.2   Spin(7) > G2 six-term formula equals the Kostant sum\n"
        "  cor-4.4   Spin(7) > G2 window on the face n0\n"
        "  cor-4.5   Spin(7) > G2 window on the face 0n\n"
        "  thm-5.2   symplectic closed form equals the Lepowsky rule\n"
        "  thm-6.4   F4 > Spin(9) closed-form bottoms equal the swept bottoms");
    verify->add_option("--pair", vc.pair, "pair identifier");
    verify->add_option("--mu", vc.mu, "single K weight instead of a sweep");
    verify->add_option("--mu-max", vc.mu_max, "bound on the K-type coordinates");
    verify->add_option("--deg-max", vc.deg_max, "bound on the degree");
    verify->add_option("--bound", vc.bound, "bound on the G weight coordinates");
    verify->add_option("--steps", vc.steps, "lambda_sph steps for stabilization");
    verify->add_flag("--oracle", vc.oracle, "also compare with the weight-peeling oracle");
    add_common(verify);
    add_weights(verify);

    MvopConfig mc;
    auto* mv = app.add_subcommand("mvop", "monic matrix orthogonal polynomials for a weight file");
    mv->add_option("weight_file", mc.file, "JSON weight specification")->required();
    mv->add_option("--n-max", mc.n_max, "highest degree");
    mv->add_option("--precision", mc.precision, "quad or double")->check(CLI::IsMember({"quad", "double"}));
    add_common(mv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*branch) return cmd_branch(bc, common);
        if (*well) return cmd_well(wc, common);
        if (*verify) return cmd_verify(vc, common);
        return cmd_mvop(mc, common);
    } catch (const cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const mvop::singular_gram_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumerical;
    } catch (const mvop::weight_error& e) {
        std::cerr << "invalid weight: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumerical;
    }
}
