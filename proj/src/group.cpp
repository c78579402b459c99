#include "fusion/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "fusion/config.hpp"
#include "fusion/error.hpp"

namespace fusion {

namespace {

constexpr std::size_t kTableLimit = 4096;

}  // namespace

GroupPtr FiniteGroup::generate(std::size_t degree, std::vector<Permutation> gens, std::string label) {
  if (degree == 0) throw FusionError(ErrorKind::MalformedPermutation, "degree must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw FusionError(ErrorKind::MalformedPermutation, "generator degree does not match group degree");

  const std::size_t cap = caps().group_order;
  std::vector<Permutation> effective;
  for (const auto& g : gens)
    if (!g.is_identity() && std::find(effective.begin(), effective.end(), g) == effective.end())
      effective.push_back(g);

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> found;
  std::deque<std::size_t> queue;
  found.push_back(Permutation::identity(degree));
  seen.insert(found.back());
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& s : effective) {
      Permutation y = found[i] * s;
      if (seen.insert(y).second) {
        found.push_back(std::move(y));
        if (found.size() > cap)
          throw FusionError(ErrorKind::OrderCapExceeded,
                            "group exceeds order cap " + std::to_string(cap));
        queue.push_back(found.size() - 1);
      }
    }
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;
  group->label_ = std::move(label);
  group->generators_ = std::move(gens);
  std::sort(found.begin(), found.end());
  group->elements_ = std::move(found);
  const std::size_t n = group->elements_.size();
  group->lookup_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) group->lookup_.emplace(group->elements_[i], static_cast<Elem>(i));
  for (const auto& s : effective) group->generator_elements_.push_back(group->lookup_.at(s));

  group->inverses_.resize(n);
  for (std::size_t i = 0; i < n; ++i) group->inverses_[i] = group->lookup_.at(group->elements_[i].inverse());

  if (n <= kTableLimit) {
    // Right multiplication by each generator, then fill columns along a
    // spanning tree of the Cayley graph: col(b * s) = R_s(col(b)).
    const auto& gidx = group->generator_elements_;
    std::vector<std::vector<Elem>> right(gidx.size(), std::vector<Elem>(n));
    for (std::size_t k = 0; k < gidx.size(); ++k)
      for (std::size_t a = 0; a < n; ++a)
        right[k][a] = group->lookup_.at(group->elements_[a] * group->elements_[gidx[k]]);
    group->table_.assign(n * n, 0);
    std::vector<bool> done(n, false);
    std::deque<Elem> q;
    for (std::size_t a = 0; a < n; ++a) group->table_[a * n] = static_cast<std::uint16_t>(a);
    done[0] = true;
    q.push_back(0);
    while (!q.empty()) {
      const Elem b = q.front();
      q.pop_front();
      for (std::size_t k = 0; k < gidx.size(); ++k) {
        const Elem c = right[k][b];
        if (done[c]) continue;
        done[c] = true;
        for (std::size_t a = 0; a < n; ++a)
          group->table_[a * n + c] = static_cast<std::uint16_t>(right[k][group->table_[a * n + b]]);
        q.push_back(c);
      }
    }
  }

  group->orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 1;
    Elem x = static_cast<Elem>(i);
    while (x != 0) {
      x = group->mul(x, static_cast<Elem>(i));
      ++k;
    }
    group->orders_[i] = k;
  }
  return group;
}

std::optional<Elem> FiniteGroup::index_of(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Elem FiniteGroup::mul_slow(Elem a, Elem b) const { return lookup_.at(elements_[a] * elements_[b]); }

Elem FiniteGroup::power(Elem a, long long n) const {
  const auto ord = static_cast<long long>(orders_[a]);
  n %= ord;
  if (n < 0) n += ord;
  Elem r = identity();
  for (long long i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->degree() == b->degree() && a->elements() == b->elements();
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign((parent_->order() + 63) / 64, 0);
  for (Elem e : members_) mask_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

Subgroup Subgroup::checked(GroupPtr parent, std::vector<Elem> members) {
  for (Elem e : members)
    if (e >= parent->order()) throw FusionError(ErrorKind::InvalidInput, "element index out of range");
  Subgroup s(std::move(parent), std::move(members));
  if (s.members_.empty() || !s.contains(FiniteGroup::identity()))
    throw FusionError(ErrorKind::InvalidInput, "subgroup must contain the identity");
  for (Elem a : s.members_) {
    if (!s.contains(s.group().inv(a))) throw FusionError(ErrorKind::InvalidInput, "not closed under inverses");
    for (Elem b : s.members_)
      if (!s.contains(s.group().mul(a, b)))
        throw FusionError(ErrorKind::InvalidInput, "not closed under products");
  }
  return s;
}

Subgroup Subgroup::whole(const GroupPtr& parent) {
  std::vector<Elem> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return Subgroup(parent, std::move(all));
}

Subgroup Subgroup::trivial(const GroupPtr& parent) { return Subgroup(parent, {FiniteGroup::identity()}); }

bool Subgroup::contains(const Subgroup& other) const {
  if (other.order() > order()) return false;
  for (Elem e : other.members_)
    if (!contains(e)) return false;
  return true;
}

std::optional<std::size_t> Subgroup::position(Elem e) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), e);
  if (it == members_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.members_ == b.members_ && same_group(a.parent_, b.parent_);
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  return a.members_ <=> b.members_;
}

std::size_t SubgroupHash::operator()(const Subgroup& s) const noexcept {
  std::size_t h = s.order();
  for (auto w : s.mask()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

void require_same_parent(const Subgroup& a, const Subgroup& b, const char* context) {
  if (!same_group(a.parent(), b.parent()))
    throw FusionError(ErrorKind::ForeignSubgroup, std::string(context) + ": subgroups live in different groups");
}

}  // namespace fusion
