#include "anyonwalk/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace anyonwalk {

BraidWord BraidWord::inverted() const {
    BraidWord w;
    w.gens.reserve(gens.size());
    for (auto it = gens.rbegin(); it != gens.rend(); ++it)
        w.gens.push_back({it->index, !it->inverse});
    return w;
}

BraidWord BraidWord::reversed() const {
    BraidWord w;
    w.gens.assign(gens.rbegin(), gens.rend());
    return w;
}

namespace {

// Flattened path key for the construction-time index map.
std::uint64_t path_key(const std::vector<std::uint8_t>& labels) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto l : labels) {
        h ^= l;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

FusionSpace::FusionSpace(int n_strands, const AnyonModel& model)
    : model_(model), n_(n_strands) {
    if (n_ < 2) throw std::invalid_argument("need at least 2 strands");
    if (model_.is_abelian()) {
        dim_ = 1;
        phase_ = {std::cos(model_.phase / 2.0), std::sin(model_.phase / 2.0)};
        return;
    }
    k_ = model_.k();
    qdim_.resize(k_ + 1);
    for (int l = 0; l <= k_; ++l) qdim_[l] = quantum_integer(k_, l + 1);

    // Enumerate vacuum-total paths in lexicographic order (DFS, low label first).
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> stack;
    stack.reserve(n_);
    auto dfs = [&](auto&& self, int pos, int label) -> void {
        if (pos == n_) {
            if (label == 1) out.push_back(stack);  // last step down to the vacuum
            return;
        }
        int rem = n_ - pos;
        for (int nxt : {label - 1, label + 1}) {
            if (nxt < 0 || nxt > k_ || nxt > rem) continue;
            stack.push_back(static_cast<std::uint8_t>(nxt));
            self(self, pos + 1, nxt);
            stack.pop_back();
        }
    };
    dfs(dfs, 1, 0);
    dim_ = out.size();
    labels_.resize(dim_ * (n_ - 1));
    std::unordered_map<std::uint64_t, std::int64_t> index;
    index.reserve(dim_ * 2);
    for (std::size_t f = 0; f < dim_; ++f) {
        std::copy(out[f].begin(), out[f].end(), labels_.begin() + f * (n_ - 1));
        index[path_key(out[f])] = static_cast<std::int64_t>(f);
    }

    // Generator tables: b_g mixes label x_g when x_{g-1} == x_{g+1}.
    partner_.resize(n_);
    ediag_.resize(n_);
    eoff_.resize(n_);
    for (int g = 1; g <= n_ - 1; ++g) {
        auto& part = partner_[g];
        auto& ed = ediag_[g];
        auto& eo = eoff_[g];
        part.resize(dim_);
        ed.assign(dim_, 0.0);
        eo.assign(dim_, 0.0);
        std::vector<std::uint8_t> probe(n_ - 1);
        for (std::size_t f = 0; f < dim_; ++f) {
            part[f] = static_cast<std::int64_t>(f);
            const std::uint8_t* lab = &labels_[f * (n_ - 1)];
            int left = (g - 1 == 0) ? 0 : lab[g - 2];
            int right = (g + 1 == n_) ? 0 : lab[g];
            int x = lab[g - 1];
            if (left != right) continue;
            ed[f] = qdim_[x] / qdim_[left];
            int x2 = (x == left - 1) ? left + 1 : left - 1;
            if (x2 < 0 || x2 > k_) continue;
            std::copy(lab, lab + (n_ - 1), probe.begin());
            probe[g - 1] = static_cast<std::uint8_t>(x2);
            auto it = index.find(path_key(probe));
            if (it == index.end()) continue;
            part[f] = it->second;
            eo[f] = std::sqrt(qdim_[x2] * qdim_[x]) / qdim_[left];
        }
    }
}

std::vector<std::uint8_t> FusionSpace::path(std::size_t f) const {
    if (model_.is_abelian()) return {};
    return {labels_.begin() + f * (n_ - 1), labels_.begin() + (f + 1) * (n_ - 1)};
}

std::size_t FusionSpace::index_of(const std::vector<std::uint8_t>& labels) const {
    for (std::size_t f = 0; f < dim_; ++f)
        if (std::equal(labels.begin(), labels.end(), labels_.begin() + f * (n_ - 1)))
            return f;
    throw std::invalid_argument("no such fusion path");
}

void FusionSpace::apply_generator(std::span<cplx> amps, int g, bool inverse) const {
    if (g < 1 || g > n_ - 1) throw std::out_of_range("generator index out of range");
    if (model_.is_abelian()) {
        cplx ph = inverse ? std::conj(phase_) : phase_;
        for (auto& a : amps) a *= ph;
        return;
    }
    if (amps.size() != dim_) throw std::invalid_argument("amplitude size mismatch");
    const cplx A = inverse ? std::conj(model_.tl_param()) : model_.tl_param();
    const cplx invA = 1.0 / A;
    const auto& part = partner_[g];
    const auto& ed = ediag_[g];
    const auto& eo = eoff_[g];
    // b = A^{-1} I + A e; 2x2 blocks are (f, partner[f]) pairs with f < partner.
    for (std::size_t f = 0; f < dim_; ++f) {
        auto p = static_cast<std::size_t>(part[f]);
        if (p == f) {
            amps[f] *= invA + A * ed[f];
        } else if (p > f) {
            cplx vf = amps[f], vp = amps[p];
            amps[f] = (invA + A * ed[f]) * vf + A * eo[f] * vp;
            amps[p] = A * eo[p] * vf + (invA + A * ed[p]) * vp;
        }
    }
}

void FusionSpace::apply_word(std::span<cplx> amps, const BraidWord& word) const {
    for (const auto& g : word.gens) apply_generator(amps, g.index, g.inverse);
}

FusionVector FusionSpace::vacuum_state() const {
    FusionVector v(dim_, cplx{0.0});
    if (model_.is_abelian()) {
        v[0] = 1.0;
        return v;
    }
    std::vector<std::uint8_t> labels(n_ - 1);
    for (int j = 1; j <= n_ - 1; ++j) labels[j - 1] = static_cast<std::uint8_t>(j % 2);
    v[index_of(labels)] = 1.0;
    return v;
}

FusionVector FusionSpace::rainbow_state() const {
    if (model_.is_abelian()) return vacuum_state();
    if (n_ % 2 != 0) throw std::invalid_argument("rainbow state needs even strand count");
    const int h = n_ / 2;
    const double d = model_.quantum_dimension();
    const double norm = std::pow(d, h);
    FusionVector v(dim_, cplx{0.0});
    for (std::size_t f = 0; f < dim_; ++f) {
        const std::uint8_t* lab = &labels_[f * (n_ - 1)];
        auto at = [&](int j) -> int { return (j == 0 || j == n_) ? 0 : lab[j - 1]; };
        bool pal = true;
        for (int j = 0; j <= h; ++j)
            if (at(j) != at(n_ - j)) { pal = false; break; }
        if (pal) v[f] = std::sqrt(qdim_[at(h)] / norm);
    }
    return v;
}

BraidWord relabel_cycle_word(int n_anyons) {
    if (n_anyons < 2) throw std::invalid_argument("need at least 2 anyons");
    BraidWord w;
    for (int i = 1; i <= n_anyons - 1; ++i) w.push(i);
    return w;
}

}  // namespace anyonwalk
