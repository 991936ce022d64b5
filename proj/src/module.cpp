#include "svir/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace svir {

void HighestWeight::validate() const {
    if (type == SectorType::NS) {
        if (h < Rational(0))
            throw std::domain_error("NS lowest weight requires h >= 0, got h=" + h.str());
    } else {
        if (h < c * Rational(1, 24))
            throw std::domain_error("R lowest weight requires h >= c/24, got h=" + h.str() +
                                    ", c=" + c.str());
    }
}

Rational StateMonomial::level() const {
    Rational sum(0);
    for (const auto& g : ops)
        sum += g.idx.abs();
    return sum;
}

long StateMonomial::charge_offset() const {
    long off = tag == LowestTag::OmegaPlus ? -1 : 0;
    for (const auto& g : ops) {
        if (g.fam == Family::Gplus)
            ++off;
        else if (g.fam == Family::Gminus)
            --off;
    }
    return off;
}

std::strong_ordering operator<=>(const StateMonomial& x, const StateMonomial& y) {
    if (auto c = static_cast<int>(x.tag) <=> static_cast<int>(y.tag); c != 0)
        return c;
    return x.ops <=> y.ops;
}

std::string StateMonomial::str() const {
    std::string out;
    for (const auto& g : ops)
        out += g.str() + " ";
    switch (tag) {
        case LowestTag::Omega: out += "O"; break;
        case LowestTag::OmegaMinus: out += "O-"; break;
        case LowestTag::OmegaPlus: out += "O+"; break;
    }
    return out;
}

Combo combo_add(const Combo& x, const Combo& y) {
    Combo out = x;
    for (const auto& [m, r] : y) {
        auto it = out.find(m);
        if (it == out.end()) {
            out.emplace(m, r);
        } else {
            it->second += r;
            if (it->second.is_zero())
                out.erase(it);
        }
    }
    return out;
}

Combo combo_scale(const Rational& s, const Combo& x) {
    Combo out;
    if (s.is_zero())
        return out;
    for (const auto& [m, r] : x)
        out.emplace(m, s * r);
    return out;
}

namespace {

// PBW placement order: family rank, then index ascending.
bool pbw_le(const GeneratorId& a, const GeneratorId& b) {
    if (a.fam != b.fam)
        return static_cast<int>(a.fam) < static_cast<int>(b.fam);
    return a.idx <= b.idx;
}

bool is_creation(const GeneratorId& g) { return g.idx.sgn() < 0; }

void add_term(Combo& acc, const StateMonomial& m, const Rational& r) {
    if (r.is_zero())
        return;
    auto it = acc.find(m);
    if (it == acc.end()) {
        acc.emplace(m, r);
    } else {
        it->second += r;
        if (it->second.is_zero())
            acc.erase(it);
    }
}

} // namespace

ModuleHandle::ModuleHandle(HighestWeight hw, Rational cutoff)
    : hw_(std::move(hw)), cutoff_(std::move(cutoff)) {
    hw_.validate();
    if (cutoff_ < Rational(0))
        throw std::domain_error("module cutoff must be >= 0");
    enumerate_basis();
    for (const auto& [key, basis] : blocks_) {
        std::size_t n = basis.size();
        Mat g = mat_zero(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                g[i][j] = inner(basis[i], basis[j]);
                g[j][i] = g[i][j];
            }
        gram_.emplace(key, std::move(g));
    }
}

void ModuleHandle::enumerate_basis() {
    // Creation mode pool sorted in PBW placement order.
    std::vector<GeneratorId> pool;
    for (long k = 1; Rational(k) <= cutoff_; ++k)
        pool.push_back(gen_L(Rational(-k)));
    for (long k = 1; Rational(k) <= cutoff_; ++k)
        pool.push_back(gen_J(Rational(-k)));
    const bool ns = hw_.type == SectorType::NS;
    for (Family fam : {Family::Gplus, Family::Gminus}) {
        Rational r = ns ? Rational(1, 2) : Rational(1);
        for (; r <= cutoff_; r += Rational(1))
            pool.push_back({fam, -r});
    }
    std::sort(pool.begin(), pool.end());

    std::vector<LowestTag> tags;
    if (hw_.two_dim_lowest())
        tags = {LowestTag::OmegaMinus, LowestTag::OmegaPlus};
    else
        tags = {LowestTag::Omega};

    std::vector<GeneratorId> current;
    std::vector<StateMonomial> all;
    // Multisets over the pool: bosonic modes repeat, fermionic ones do not.
    auto rec = [&](auto&& self, std::size_t start, const Rational& budget) -> void {
        for (LowestTag tag : tags)
            all.push_back({tag, current});
        for (std::size_t i = start; i < pool.size(); ++i) {
            Rational lv = pool[i].idx.abs();
            if (lv > budget)
                continue;
            bool fermion = pool[i].odd();
            current.push_back(pool[i]);
            self(self, fermion ? i + 1 : i, budget - lv);
            current.pop_back();
        }
    };
    rec(rec, 0, cutoff_);

    for (auto& m : all) {
        BlockKey key{m.level(), hw_.q + Rational(m.charge_offset())};
        blocks_[key].push_back(std::move(m));
    }
    for (auto& [key, basis] : blocks_)
        std::sort(basis.begin(), basis.end());
}

Combo ModuleHandle::apply_lowest(const GeneratorId& g, LowestTag tag) const {
    Combo out;
    StateMonomial base{tag, {}};
    if (g.fam == Family::Central) {
        add_term(out, base, hw_.c);
        return out;
    }
    int s = g.idx.sgn();
    if (s < 0) {
        add_term(out, {tag, {g}}, Rational(1));
        return out;
    }
    if (s > 0)
        return out; // annihilator
    // Zero modes on the lowest space.
    switch (g.fam) {
        case Family::L:
            add_term(out, base, hw_.h);
            return out;
        case Family::J:
            add_term(out, base,
                     tag == LowestTag::OmegaPlus ? hw_.q - Rational(1) : hw_.q);
            return out;
        case Family::Gplus:
            if (tag == LowestTag::OmegaPlus)
                add_term(out, {LowestTag::OmegaMinus, {}},
                         Rational(2) * hw_.h - hw_.c * Rational(1, 12));
            return out; // G0+ Omega = G0+ Omega- = 0
        case Family::Gminus:
            if (tag == LowestTag::OmegaMinus)
                add_term(out, {LowestTag::OmegaPlus, {}}, Rational(1));
            return out; // G0- Omega = G0- Omega+ = 0
        default:
            throw std::logic_error("apply_lowest: unexpected zero mode");
    }
}

const Combo& ModuleHandle::apply(const GeneratorId& g, const StateMonomial& m) const {
    auto cache_key = std::make_pair(g, m);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (auto it = apply_cache_.find(cache_key); it != apply_cache_.end())
            return it->second;
    }

    Combo out;
    if (g.fam == Family::Central) {
        add_term(out, m, hw_.c);
    } else if (m.ops.empty()) {
        out = apply_lowest(g, m.tag);
    } else {
        const GeneratorId& head = m.ops.front();
        if (is_creation(g) && pbw_le(g, head)) {
            if (g == head && g.odd()) {
                // fermionic mode squared
            } else {
                StateMonomial placed{m.tag, {}};
                placed.ops.reserve(m.ops.size() + 1);
                placed.ops.push_back(g);
                placed.ops.insert(placed.ops.end(), m.ops.begin(), m.ops.end());
                add_term(out, placed, Rational(1));
            }
        } else {
            // g X = eps X g + [g, X]
            StateMonomial rest{m.tag, {m.ops.begin() + 1, m.ops.end()}};
            Rational eps = (g.odd() && head.odd()) ? Rational(-1) : Rational(1);
            for (const auto& [mono, r] : apply(g, rest))
                for (const auto& [mono2, r2] : apply(head, mono))
                    add_term(out, mono2, eps * r * r2);
            AlgebraElement br = bracket(g, head, flow_param());
            for (const auto& [gen, coeff] : br.terms())
                for (const auto& [mono, r] : apply(gen, rest))
                    add_term(out, mono, coeff.to_rational() * r);
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = apply_cache_.emplace(std::move(cache_key), std::move(out));
    return it->second;
}

Combo ModuleHandle::apply(const GeneratorId& g, const Combo& v) const {
    Combo out;
    for (const auto& [m, r] : v)
        for (const auto& [mono, r2] : apply(g, m))
            add_term(out, mono, r * r2);
    return out;
}

Rational ModuleHandle::lowest_inner(LowestTag a, LowestTag b) const {
    if (a != b)
        return Rational(0);
    if (a == LowestTag::OmegaPlus)
        return Rational(2) * hw_.h - hw_.c * Rational(1, 12);
    return Rational(1);
}

Rational ModuleHandle::inner(const StateMonomial& u, const Combo& v) const {
    if (u.ops.empty()) {
        Rational sum(0);
        for (const auto& [m, r] : v)
            if (m.ops.empty())
                sum += r * lowest_inner(u.tag, m.tag);
        return sum;
    }
    StateMonomial rest{u.tag, {u.ops.begin() + 1, u.ops.end()}};
    return inner(rest, apply(adjoint_gen(u.ops.front()), v));
}

Rational ModuleHandle::inner(const StateMonomial& u, const StateMonomial& v) const {
    return inner(u, Combo{{v, Rational(1)}});
}

const std::vector<StateMonomial>& ModuleHandle::block_basis(const BlockKey& key) const {
    static const std::vector<StateMonomial> empty;
    auto it = blocks_.find(key);
    return it == blocks_.end() ? empty : it->second;
}

const Mat& ModuleHandle::gram(const BlockKey& key) const {
    static const Mat empty;
    auto it = gram_.find(key);
    return it == gram_.end() ? empty : it->second;
}

std::size_t ModuleHandle::gram_rank(const Rational& level, const Rational& charge) const {
    if (level > cutoff_)
        throw std::domain_error("gram_rank: level beyond cutoff");
    return mat_rank(gram({level, charge}));
}

bool ModuleHandle::gram_is_psd() const { return !first_non_psd_block().has_value(); }

std::optional<BlockKey> ModuleHandle::first_non_psd_block() const {
    for (const auto& [key, g] : gram_)
        if (!mat_psd(g).is_psd)
            return key;
    return std::nullopt;
}

std::vector<std::pair<Rational, long>> ModuleHandle::character_coeffs() const {
    std::map<Rational, long> dims;
    Rational step = hw_.type == SectorType::NS ? Rational(1, 2) : Rational(1);
    for (Rational lv(0); lv <= cutoff_; lv += step)
        dims[lv] = 0;
    for (const auto& [key, g] : gram_)
        dims[key.level] += static_cast<long>(mat_rank(g));
    std::vector<std::pair<Rational, long>> out;
    out.reserve(dims.size());
    for (const auto& [lv, d] : dims)
        out.emplace_back(hw_.h + lv, d);
    return out;
}

int ModuleHandle::grading_sign(const StateMonomial& s) const {
    if (hw_.type == SectorType::R)
        return s.charge_offset() % 2 == 0 ? 1 : -1;
    return s.level().is_integer() ? 1 : -1;
}

Mat ModuleHandle::mode_matrix(const GeneratorId& g, const BlockKey& from) const {
    if (!generator_valid(g, flow_param()))
        throw std::domain_error("mode_matrix: " + g.str() + " is not a mode of this module");
    long dq = g.fam == Family::Gplus ? 1 : (g.fam == Family::Gminus ? -1 : 0);
    BlockKey to{from.level - g.idx, from.charge + Rational(dq)};
    if (from.level > cutoff_ || to.level > cutoff_)
        throw std::domain_error("mode_matrix: source or target level beyond cutoff");
    const auto& src = block_basis(from);
    const auto& dst = block_basis(to);
    std::map<StateMonomial, std::size_t> index;
    for (std::size_t i = 0; i < dst.size(); ++i)
        index.emplace(dst[i], i);
    Mat out = mat_zero(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        for (const auto& [mono, r] : apply(g, src[j])) {
            auto it = index.find(mono);
            if (it == index.end())
                throw std::logic_error("mode_matrix: image outside target block");
            out[it->second][j] = r;
        }
    }
    return out;
}

std::vector<StateMonomial> ModuleHandle::level_basis(const Rational& level) const {
    std::vector<StateMonomial> out;
    for (const auto& [key, basis] : blocks_)
        if (key.level == level)
            out.insert(out.end(), basis.begin(), basis.end());
    return out;
}

std::vector<Rational> ModuleHandle::level_charges(const Rational& level) const {
    std::vector<Rational> out;
    for (const auto& [key, basis] : blocks_)
        if (key.level == level)
            for (std::size_t i = 0; i < basis.size(); ++i)
                out.push_back(key.charge);
    return out;
}

Mat ModuleHandle::zero_mode_matrix(ZeroMode which, const Rational& level) const {
    if ((which == ZeroMode::G0plus || which == ZeroMode::G0minus) && hw_.type == SectorType::NS)
        throw std::domain_error("zero_mode_matrix: G_0 modes do not exist in the NS sector");
    if (level > cutoff_)
        throw std::domain_error("zero_mode_matrix: level beyond cutoff");
    auto basis = level_basis(level);
    std::map<StateMonomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i], i);
    GeneratorId g = which == ZeroMode::G0plus    ? gen_Gp(Rational(0))
                    : which == ZeroMode::G0minus ? gen_Gm(Rational(0))
                    : which == ZeroMode::L0      ? gen_L(Rational(0))
                                                 : gen_J(Rational(0));
    Mat out = mat_zero(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (const auto& [mono, r] : apply(g, basis[j])) {
            auto it = index.find(mono);
            if (it == index.end())
                throw std::logic_error("zero_mode_matrix: image escaped the level subspace");
            out[it->second][j] = r;
        }
    }
    return out;
}

ModuleHandle build_module(const HighestWeight& hw, const Rational& cutoff) {
    return ModuleHandle(hw, cutoff);
}

} // namespace svir
