#include "dunkl/groups.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace dunkl {

namespace {

Scalar zeta_scalar(uint32_t m, long e) {
    return Scalar(Cyclotomic::zeta_pow(m, e));
}

}  // namespace

ReflectionGroup ReflectionGroup::symmetric(int n) {
    if (n < 2)
        throw std::domain_error("symmetric group needs n >= 2");
    ReflectionGroup g;
    g.kind_ = GroupKind::Symmetric;
    g.nm_ = n;
    g.dim_ = n;
    g.cyclo_order_ = 1;
    for (int k = 1; k <= n; ++k)
        g.degrees_.push_back(static_cast<uint32_t>(k));
    g.classes_.resize(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Reflection s;
            s.a = i;
            s.b = j;
            s.class_index = 0;
            s.matrix.assign(n, std::vector<Scalar>(n));
            for (int k = 0; k < n; ++k)
                s.matrix[k][k] = Scalar(1);
            s.matrix[i][i] = Scalar(0);
            s.matrix[j][j] = Scalar(0);
            s.matrix[i][j] = Scalar(1);
            s.matrix[j][i] = Scalar(1);
            s.root = Poly::variable(n, i) - Poly::variable(n, j);
            g.classes_[0].push_back(static_cast<int>(g.reflections_.size()));
            g.reflections_.push_back(std::move(s));
        }
    g.bform_.assign(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i)
        g.bform_[i][i] = Scalar(1);
    for (int i = 1; i <= n; ++i)
        g.var_names_.push_back("x" + std::to_string(i));
    return g;
}

ReflectionGroup ReflectionGroup::dihedral(int m) {
    if (m < 3)
        throw std::domain_error("dihedral group needs m >= 3");
    ReflectionGroup g;
    g.kind_ = GroupKind::Dihedral;
    g.nm_ = m;
    g.dim_ = 2;
    g.cyclo_order_ = static_cast<uint32_t>(m);
    g.degrees_ = {2, static_cast<uint32_t>(m)};
    bool even = m % 2 == 0;
    g.classes_.resize(even ? 2 : 1);
    for (int j = 0; j < m; ++j) {
        Reflection s;
        s.a = j;
        s.class_index = even ? (j % 2 == 1 ? 0 : 1) : 0;
        // matrix: z -> zeta^j w, w -> zeta^-j z
        s.matrix = {{Scalar(0), zeta_scalar(g.cyclo_order_, -j)},
                    {zeta_scalar(g.cyclo_order_, j), Scalar(0)}};
        s.root = Poly::variable(2, 0) - Poly::variable(2, 1).scaled(zeta_scalar(g.cyclo_order_, j));
        g.classes_[static_cast<size_t>(s.class_index)].push_back(j);
        g.reflections_.push_back(std::move(s));
    }
    g.bform_ = {{Scalar(0), Scalar(2)}, {Scalar(2), Scalar(0)}};
    g.var_names_ = {"z", "w"};
    return g;
}

ReflectionGroup ReflectionGroup::parse_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::domain_error("group spec must look like 'Sn:4' or 'I2:5'");
    std::string head = spec.substr(0, colon);
    int v = std::stoi(spec.substr(colon + 1));
    if (head == "Sn")
        return symmetric(v);
    if (head == "I2")
        return dihedral(v);
    throw std::domain_error("unknown group family '" + head + "'");
}

std::string ReflectionGroup::spec_string() const {
    return (kind_ == GroupKind::Symmetric ? "Sn:" : "I2:") + std::to_string(nm_);
}

Poly ReflectionGroup::act(const Reflection& s, const Poly& f) const {
    if (f.arity() != dim_)
        throw std::domain_error("act: arity mismatch");
    Poly out(dim_);
    if (kind_ == GroupKind::Symmetric) {
        for (const auto& [mo, co] : f.terms()) {
            Mono mm = mo;
            std::swap(mm[static_cast<size_t>(s.a)], mm[static_cast<size_t>(s.b)]);
            out.add_term(mm, co);
        }
        return out;
    }
    // z^p w^q -> zeta^{j(p-q)} w^p z^q
    for (const auto& [mo, co] : f.terms()) {
        long p = mo[0], q = mo[1];
        Mono mm{static_cast<uint32_t>(q), static_cast<uint32_t>(p)};
        out.add_term(mm, co * zeta_scalar(cyclo_order_, s.a * (p - q)));
    }
    return out;
}

Poly ReflectionGroup::act_perm(const std::vector<int>& perm, const Poly& f) {
    Poly out(f.arity());
    for (const auto& [mo, co] : f.terms()) {
        Mono mm(mo.size());
        for (size_t i = 0; i < mo.size(); ++i)
            mm[static_cast<size_t>(perm[i])] = mo[i];
        out.add_term(mm, co);
    }
    return out;
}

Poly ReflectionGroup::act_matrix(const std::vector<std::vector<Scalar>>& m, const Poly& f) {
    int ar = f.arity();
    std::vector<Poly> images;
    for (int i = 0; i < ar; ++i) {
        Poly im(ar);
        for (int r = 0; r < ar; ++r)
            im += Poly::variable(ar, r, m[static_cast<size_t>(r)][static_cast<size_t>(i)]);
        images.push_back(std::move(im));
    }
    return f.substituted(images);
}

Scalar ReflectionGroup::root_component(const Reflection& s, int i) const {
    Mono m(static_cast<size_t>(dim_), 0);
    m[static_cast<size_t>(i)] = 1;
    return s.root.coeff(m);
}

Poly ReflectionGroup::dualize(const Poly& f) const {
    if (kind_ == GroupKind::Symmetric)
        return f;  // B is the identity
    // psi(z) = 2 y_w, psi(w) = 2 y_z: swap exponents, scale by 2^deg
    Poly out(2);
    for (const auto& [mo, co] : f.terms()) {
        Mono mm{mo[1], mo[0]};
        Rational scale(1);
        for (uint32_t k = 0; k < mo[0] + mo[1]; ++k)
            scale *= Rational(2);
        out.add_term(mm, co * Scalar(scale));
    }
    return out;
}

Poly ReflectionGroup::coset_orbit_sum(int k, const Poly& f) const {
    if (kind_ != GroupKind::Symmetric)
        throw std::domain_error("coset_orbit_sum: S_n only");
    int n = nm_;
    if (f.arity() != n)
        throw std::domain_error("coset_orbit_sum: arity mismatch");
    // invariance check under S_k x S_{n-k} adjacent transpositions
    for (int i = 0; i + 1 < n; ++i) {
        if (i + 1 == k)
            continue;
        std::vector<int> perm(n);
        for (int t = 0; t < n; ++t)
            perm[t] = t;
        std::swap(perm[i], perm[i + 1]);
        if (act_perm(perm, f) != f)
            throw std::domain_error("coset_orbit_sum: argument not S_k x S_{n-k} invariant");
    }
    Poly out(n);
    std::vector<int> subset(static_cast<size_t>(k));
    // iterate k-subsets J of {0..n-1}; send block {0..k-1} to J in order
    for (int i = 0; i < k; ++i)
        subset[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<int> perm(n);
        std::vector<bool> used(n, false);
        for (int i = 0; i < k; ++i) {
            perm[i] = subset[static_cast<size_t>(i)];
            used[static_cast<size_t>(subset[static_cast<size_t>(i)])] = true;
        }
        int pos = k;
        for (int t = 0; t < n; ++t)
            if (!used[static_cast<size_t>(t)])
                perm[pos++] = t;
        out += act_perm(perm, f);
        // next subset
        int i = k - 1;
        while (i >= 0 && subset[static_cast<size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++subset[static_cast<size_t>(i)];
        for (int t = i + 1; t < k; ++t)
            subset[static_cast<size_t>(t)] = subset[static_cast<size_t>(t - 1)] + 1;
    }
    return out;
}

Poly ReflectionGroup::e2() const {
    if (kind_ == GroupKind::Symmetric) {
        Poly s(dim_);
        for (int i = 0; i < dim_; ++i) {
            Mono m(static_cast<size_t>(dim_), 0);
            m[static_cast<size_t>(i)] = 2;
            s.add_term(m, Scalar(1));
        }
        return s;
    }
    return Poly::monomial(Mono{1, 1}, Scalar(1));
}

std::string ReflectionGroup::describe_json() const {
    nlohmann::json j;
    j["group"] = spec_string();
    j["dimension"] = dim_;
    j["degrees"] = degrees_;
    j["variables"] = var_names_;
    Field f{cyclo_order_, {}};
    nlohmann::json refl = nlohmann::json::array();
    for (const Reflection& s : reflections_) {
        nlohmann::json r;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : s.matrix) {
            nlohmann::json cells = nlohmann::json::array();
            for (const auto& v : row)
                cells.push_back(v.str_plain(f));
            rows.push_back(std::move(cells));
        }
        r["matrix"] = std::move(rows);
        r["root"] = s.root.str(f, var_names_);
        r["class"] = s.class_index;
        refl.push_back(std::move(r));
    }
    j["reflections"] = std::move(refl);
    j["classes"] = classes_;
    nlohmann::json b = nlohmann::json::array();
    for (const auto& row : bform_) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& v : row)
            cells.push_back(v.str_plain(f));
        b.push_back(std::move(cells));
    }
    j["scalar_product"] = std::move(b);
    return j.dump(2);
}

MultiplicityFunction MultiplicityFunction::symbolic(const ReflectionGroup& g) {
    MultiplicityFunction m;
    size_t k = g.classes().size();
    if (k == 1) {
        m.param_names = {"c"};
        m.values = {Scalar::symbol(0, 1)};
    } else {
        m.param_names = {"c1", "c2"};
        m.values = {Scalar::symbol(0, 1), Scalar::symbol(1, 1)};
    }
    return m;
}

MultiplicityFunction MultiplicityFunction::symbolic_equal(const ReflectionGroup& g) {
    MultiplicityFunction m;
    m.param_names = {"c"};
    m.values.assign(g.classes().size(), Scalar::symbol(0, 1));
    return m;
}

MultiplicityFunction MultiplicityFunction::numeric(const ReflectionGroup& g, const std::vector<Rational>& vals) {
    if (vals.size() != g.classes().size())
        throw std::domain_error("multiplicity: need one value per conjugacy class");
    MultiplicityFunction m;
    for (const auto& v : vals)
        m.values.push_back(Scalar(v));
    return m;
}

}  // namespace dunkl
