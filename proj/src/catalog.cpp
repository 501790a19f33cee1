#include "twist/catalog.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace twist {

GenWord inverse(const GenWord& w)
{
    GenWord r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->name, -it->exp});
    return r;
}

GenWord concat(const GenWord& a, const GenWord& b)
{
    GenWord r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

GenWord positive_word(const std::vector<std::string>& names)
{
    GenWord r;
    for (const auto& n : names) r.push_back({n, 1});
    return r;
}

void ValidationReport::fail(const std::string& why)
{
    if (ok) first_failure = why;
    ok = false;
    checks.push_back("FAIL " + why);
}

SignSearch daisy_sign_search(int g, const HomClass& delta0, const std::vector<HomClass>& deltas, int p)
{
    // LHS: delta0^(p-1) delta_1 ... delta_{p+1}; interior j: delta_j + eps_j delta0.
    SignSearch out;
    const int q = static_cast<int>(deltas.size());
    if (q != p + 1) throw std::invalid_argument("daisy_sign_search: need p+1 petals");
    std::vector<SignedClass> lhs;
    for (int k = 0; k < p - 1; ++k) lhs.push_back({delta0, 1});
    for (const auto& d : deltas) lhs.push_back({d, 1});
    const SpMatrix target = product_image(g, lhs);
    for (unsigned long mask = 0; mask < (1ul << q); ++mask) {
        std::vector<SignedClass> rhs;
        std::vector<int> eps(q);
        for (int j = 0; j < q; ++j) {
            eps[j] = (mask >> j) & 1 ? -1 : 1;
            rhs.push_back({eps[j] > 0 ? add(deltas[j], delta0) : add(deltas[j], negate(delta0)), 1});
        }
        if (product_image(g, rhs) == target) {
            out.all.push_back(eps);
            ++out.solutions;
        }
    }
    return out;
}

std::string Catalog::chain_name(int i) const
{
    return (lifted() ? "alpha" : "c") + std::to_string(i);
}

const CurveEntry* Catalog::find(const std::string& name) const
{
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &curves_[it->second];
}

const CurveEntry& Catalog::at(const std::string& name) const
{
    const CurveEntry* e = find(name);
    if (!e) throw std::out_of_range("unknown curve '" + name + "'");
    return *e;
}

void Catalog::add_curve(CurveEntry e)
{
    if (index_.count(e.name)) throw std::invalid_argument("duplicate curve " + e.name);
    e.order = static_cast<int>(curves_.size());
    e.z2 = z2_bits(e.cls);
    index_[e.name] = curves_.size();
    curves_.push_back(std::move(e));
}

void Catalog::set_class(const std::string& name, const HomClass& cls)
{
    auto it = index_.find(name);
    if (it == index_.end()) throw std::out_of_range("unknown curve '" + name + "'");
    curves_[it->second].cls = cls;
    curves_[it->second].z2 = z2_bits(cls);
}

void Catalog::add_disjoint(const std::string& a, const std::string& b)
{
    if (a == b) return;
    auto& la = disjoint_[a];
    if (std::find(la.begin(), la.end(), b) == la.end()) la.push_back(b);
    auto& lb = disjoint_[b];
    if (std::find(lb.begin(), lb.end(), a) == lb.end()) lb.push_back(a);
    disjoint_pairs_.insert({a, b});
    disjoint_pairs_.insert({b, a});
}

bool Catalog::is_boundary_letter(const std::string& name) const
{
    const CurveEntry* e = find(name);
    return e && e->kind == CurveKind::boundary;
}

bool Catalog::disjoint(const std::string& a, const std::string& b) const
{
    if (a == b) return false;
    if (n_ > 0 && (is_boundary_letter(a) || is_boundary_letter(b))) return true;
    return disjoint_pairs_.count({a, b}) > 0;
}

bool Catalog::braid_pair(const std::string& a, const std::string& b) const
{
    for (const auto& [x, y] : braid_pairs())
        if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
}

std::vector<std::pair<std::string, std::string>> Catalog::braid_pairs() const
{
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 1; i <= 2 * g_; ++i) out.emplace_back(chain_name(i), chain_name(i + 1));
    if (lifted()) out.emplace_back(chain_name(2 * g_), "alphap");
    return out;
}

SpMatrix Catalog::word_matrix(const GenWord& w) const
{
    SpMatrix m(2 * g_);
    for (const auto& x : w) {
        const auto& c = at(x.name).cls;
        if (is_zero(c)) continue;
        m = m * (x.exp > 0 ? SpMatrix::transvection(c) : SpMatrix::transvection_inverse(c));
    }
    return m;
}

HomClass Catalog::apply_word(const GenWord& w, const HomClass& v) const
{
    HomClass r = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const auto& c = at(it->name).cls;
        Int t = pairing(r, c);
        if (t == 0) continue;
        if (it->exp < 0) t = -t;
        for (size_t k = 0; k < r.size(); ++k) r[k] += t * c[k];
    }
    return r;
}

void Catalog::add_relator(Relator r) { relators_[r.id] = std::move(r); }

std::optional<Relator> Catalog::relator(const std::string& id) const
{
    auto it = relators_.find(id);
    if (it == relators_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> Catalog::relator_ids() const
{
    std::vector<std::string> ids;
    for (const auto& [k, v] : relators_) ids.push_back(k);
    return ids;
}

SpMatrix relator_side_image(const Catalog& cat, const std::vector<std::string>& side)
{
    std::vector<SignedClass> f;
    for (const auto& n : side) f.push_back({cat.at(n).cls, 1});
    return product_image(cat.genus(), f);
}

}  // namespace twist
