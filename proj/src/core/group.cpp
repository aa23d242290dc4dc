#include "core/group.hpp"

#include <algorithm>
#include <sstream>

#include "core/errors.hpp"

namespace permdiam {

struct PermGroup::Impl {
  GenSet gens;
  mutable std::once_flag once;
  mutable std::unique_ptr<StabChain> chain;

  explicit Impl(GenSet g) : gens(std::move(g)) {}

  const StabChain& get_chain() const {
    std::call_once(once, [this] {
      chain = std::make_unique<StabChain>(gens.degree(), [&] {
        std::vector<Perm> ps;
        for (const auto& [_, p] : gens.entries()) ps.push_back(p);
        return ps;
      }());
    });
    return *chain;
  }
};

PermGroup::PermGroup(GenSet gens) : impl_(std::make_shared<Impl>(std::move(gens))) {}

PermGroup::PermGroup(std::size_t degree, const std::vector<Perm>& gens,
                     const std::string& label_prefix)
    : PermGroup(genset_from_perms(degree, gens, label_prefix)) {}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(GenSet(degree)); }

std::size_t PermGroup::degree() const { return impl_->gens.degree(); }

const GenSet& PermGroup::gens() const { return impl_->gens; }

std::vector<Perm> PermGroup::gen_perms() const { return impl_->gens.perms(); }

const StabChain& PermGroup::chain() const { return impl_->get_chain(); }

BigInt PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Perm& p) const { return chain().contains(p); }

bool PermGroup::is_trivial() const {
  for (const auto& [_, p] : impl_->gens.entries())
    if (!p.is_identity()) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  const auto& e = impl_->gens.entries();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (e[i].second * e[j].second != e[j].second * e[i].second) return false;
  return true;
}

bool PermGroup::contains_group(const PermGroup& H) const {
  for (const auto& [_, p] : H.gens().entries())
    if (!contains(p)) return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup& H) const {
  return order() == H.order() && contains_group(H);
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Perm> out;
  for_each_element([&](const Perm& p) { out.push_back(p); }, cap);
  return out;
}

void PermGroup::for_each_element(const std::function<void(const Perm&)>& visit,
                                 std::uint64_t cap) const {
  chain().for_each_element(visit, cap);
}

std::vector<Perm> PermGroup::pointwise_stabilizer_gens(const std::vector<Point>& pts) const {
  StabChain c(degree(), gen_perms(), pts);
  return c.level_gens(pts.size());
}

std::string PermGroup::sorted_gen_rendering() const {
  std::vector<std::string> rs;
  for (const auto& [_, p] : impl_->gens.entries()) rs.push_back(p.cycle_string());
  std::sort(rs.begin(), rs.end());
  std::ostringstream os;
  for (const auto& r : rs) os << r;
  return os.str();
}

PermGroup join(const PermGroup& A, const PermGroup& B) {
  if (A.degree() != B.degree()) throw DomainError("joining groups of different degrees");
  std::vector<Perm> gens = A.gen_perms();
  for (const Perm& p : B.gen_perms())
    if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(p);
  return PermGroup(A.degree(), gens);
}

}  // namespace permdiam
