#include "fibwise/directimage.hpp"

#include <sstream>
#include <stdexcept>

namespace fibwise {

SimplexFamily::SimplexFamily(SSetPtr w, SMap to_w)
    : w_(std::move(w)), to_w_(std::move(to_w)) {}

SSetPtr SimplexFamily::delta(int n) {
  while (static_cast<int>(std_.size()) <= n)
    std_.push_back(standard(static_cast<int>(std_.size())));
  return std_[n];
}

std::pair<SMap, Pullback>& SimplexFamily::at(const Value& sigma) {
  std::string k = value_key(sigma);
  auto it = built_.find(k);
  if (it != built_.end()) return it->second;
  SSetPtr dn = delta(sigma.dim());
  SMap cl = classifying_map(dn, w_, sigma);
  Pullback pb(cl, to_w_);
  return built_.emplace(k, std::make_pair(std::move(cl), std::move(pb)))
      .first->second;
}

SMap SimplexFamily::restrict(const Value& tau, const Value& sigma,
                             const SMap& op) {
  auto& pt = at(tau);
  auto& ps = at(sigma);
  return ps.second.factor(SMap::compose(op, pt.second.pr1()),
                          pt.second.pr2());
}

std::string map_fingerprint(const SMap& t) {
  std::ostringstream os;
  for (const auto& lv : t.assignment())
    for (const auto& v : lv) os << value_key(v) << ';';
  return os.str();
}

std::string section_elem_key(const Value& sigma, const SMap& t) {
  return value_key(sigma) + "#" + map_fingerprint(t);
}

namespace {
std::string elem_key(const Value& sigma, const SMap& t) {
  return section_elem_key(sigma, t);
}
}  // namespace

DirectImage direct_image(const SMap& f, const RetSpace& Y, int bound) {
  if (f.src().get() != Y.base.get())
    throw std::invalid_argument("direct_image: base mismatch");
  SSetPtr X2 = f.tgt();
  if (X2->dim() > bound)
    throw std::invalid_argument(
        "direct_image: bound below the dimension of the target base");
  auto fam = std::make_shared<SimplexFamily>(X2, f);

  RawSSet raw(bound);
  std::vector<std::vector<DirectImage::Elem>> elems(bound + 1);

  for (int n = 0; n <= bound; ++n) {
    for (const auto& sigma : X2->values(n)) {
      auto& [cl, pb] = fam->at(sigma);
      (void)cl;
      EnumOptions opts;
      opts.constraints.push_back(
          MapConstraint{std::nullopt, Y.retraction, pb.pr2()});
      for (auto& t : enumerate_maps(pb.space(), Y.total, opts)) {
        int idx = raw.add(n, elem_key(sigma, t));
        if (idx == static_cast<int>(elems[n].size()))
          elems[n].push_back(DirectImage::Elem{sigma, std::move(t)});
      }
    }
  }

  for (int n = 0; n <= bound; ++n) {
    for (int e = 0; e < raw.size(n); ++e) {
      const auto& el = elems[n][e];
      for (int i = 0; i <= n && n > 0; ++i) {
        Value tau = X2->face(el.sigma, i);
        SMap delta = coface_map(fam->delta(n - 1), fam->delta(n), i);
        SMap rest = fam->restrict(tau, el.sigma, delta);
        SMap t2 = SMap::compose(el.t, rest);
        raw.set_face(n, e, i, raw.index_of(n - 1, elem_key(tau, t2)));
      }
      if (n < bound)
        for (int i = 0; i <= n; ++i) {
          Value tau = X2->degeneracy(el.sigma, i);
          SMap sg = codegeneracy_map(fam->delta(n + 1), fam->delta(n), i);
          SMap rest = fam->restrict(tau, el.sigma, sg);
          SMap t2 = SMap::compose(el.t, rest);
          raw.set_degeneracy(n, e, i, raw.index_of(n + 1, elem_key(tau, t2)));
        }
    }
  }

  RawSSet::Normal norm = raw.normalize("di");
  SSetPtr total = norm.space;

  std::vector<std::vector<Value>> ret_assign(total->dim() + 1);
  for (int n = 0; n <= total->dim(); ++n)
    for (int j = 0; j < total->level_size(n); ++j)
      ret_assign[n].push_back(elems[n][norm.raw_of[n][j]].sigma);
  SMap retraction = SMap::build(total, X2, std::move(ret_assign));

  std::vector<std::vector<Value>> sec_assign(X2->dim() + 1);
  for (int n = 0; n <= X2->dim(); ++n)
    for (int j = 0; j < X2->level_size(n); ++j) {
      Value sigma = SSet::pure(SimplexRef{n, j});
      auto& [cl, pb] = fam->at(sigma);
      (void)cl;
      SMap zero = SMap::compose(Y.section, pb.pr2());
      sec_assign[n].push_back(
          norm.value_of[n][raw.index_of(n, elem_key(sigma, zero))]);
    }
  SMap section = SMap::build(X2, total, std::move(sec_assign));

  RetSpace sp =
      make_retspace(X2, total, std::move(section), std::move(retraction));
  return DirectImage{Y,         bound,           std::move(sp),
                     std::move(raw), std::move(norm), std::move(elems),
                     std::move(fam)};
}

int InternalHom::raw_index(const Value& v) const {
  if (inv_.empty()) {
    inv_.resize(bound + 1);
    for (int n = 0; n <= bound; ++n)
      for (int e = 0; e < raw.size(n); ++e)
        inv_[n][value_key(norm.value_of[n][e])] = e;
  }
  auto it = inv_[v.dim()].find(value_key(v));
  if (it == inv_[v.dim()].end())
    throw std::invalid_argument("internal_hom: foreign value");
  return it->second;
}

InternalHom internal_hom(const RetSpace& Y, const RetSpace& Z, int bound) {
  if (!Y.same_base(Z))
    throw std::invalid_argument("internal_hom: base mismatch");
  SSetPtr X = Y.base;
  if (X->dim() > bound)
    throw std::invalid_argument(
        "internal_hom: bound below the dimension of the base");
  auto fam = std::make_shared<SimplexFamily>(X, Y.retraction);

  RawSSet raw(bound);
  std::vector<std::vector<InternalHom::Elem>> elems(bound + 1);

  for (int n = 0; n <= bound; ++n) {
    for (const auto& sigma : X->values(n)) {
      auto& [cl, pb] = fam->at(sigma);
      SSetPtr dn = fam->delta(n);
      SMap shat = pb.factor(SMap::identity(dn), SMap::compose(Y.section, cl));
      EnumOptions opts;
      SMap projx = SMap::compose(cl, pb.pr1());
      opts.constraints.push_back(
          MapConstraint{std::nullopt, Z.retraction, projx});
      opts.constraints.push_back(
          MapConstraint{shat, std::nullopt, SMap::compose(Z.section, cl)});
      for (auto& u : enumerate_maps(pb.space(), Z.total, opts)) {
        int idx = raw.add(n, elem_key(sigma, u));
        if (idx == static_cast<int>(elems[n].size()))
          elems[n].push_back(InternalHom::Elem{sigma, std::move(u)});
      }
    }
  }

  for (int n = 0; n <= bound; ++n) {
    for (int e = 0; e < raw.size(n); ++e) {
      const auto& el = elems[n][e];
      for (int i = 0; i <= n && n > 0; ++i) {
        Value tau = X->face(el.sigma, i);
        SMap delta = coface_map(fam->delta(n - 1), fam->delta(n), i);
        SMap rest = fam->restrict(tau, el.sigma, delta);
        SMap u2 = SMap::compose(el.u, rest);
        raw.set_face(n, e, i, raw.index_of(n - 1, elem_key(tau, u2)));
      }
      if (n < bound)
        for (int i = 0; i <= n; ++i) {
          Value tau = X->degeneracy(el.sigma, i);
          SMap sg = codegeneracy_map(fam->delta(n + 1), fam->delta(n), i);
          SMap rest = fam->restrict(tau, el.sigma, sg);
          SMap u2 = SMap::compose(el.u, rest);
          raw.set_degeneracy(n, e, i, raw.index_of(n + 1, elem_key(tau, u2)));
        }
    }
  }

  RawSSet::Normal norm = raw.normalize("ih");
  SSetPtr total = norm.space;

  std::vector<std::vector<Value>> ret_assign(total->dim() + 1);
  for (int n = 0; n <= total->dim(); ++n)
    for (int j = 0; j < total->level_size(n); ++j)
      ret_assign[n].push_back(elems[n][norm.raw_of[n][j]].sigma);
  SMap retraction = SMap::build(total, X, std::move(ret_assign));

  std::vector<std::vector<Value>> sec_assign(X->dim() + 1);
  for (int n = 0; n <= X->dim(); ++n)
    for (int j = 0; j < X->level_size(n); ++j) {
      Value sigma = SSet::pure(SimplexRef{n, j});
      auto& [cl, pb] = fam->at(sigma);
      SMap zero = SMap::compose(Z.section, SMap::compose(cl, pb.pr1()));
      sec_assign[n].push_back(
          norm.value_of[n][raw.index_of(n, elem_key(sigma, zero))]);
    }
  SMap section = SMap::build(X, total, std::move(sec_assign));

  RetSpace sp =
      make_retspace(X, total, std::move(section), std::move(retraction));
  InternalHom out{Y,
                  Z,
                  bound,
                  std::move(sp),
                  std::move(raw),
                  std::move(norm),
                  std::move(elems),
                  std::move(fam)};
  return out;
}

InternalHom pcotensor(SSetPtr X, const SMap& terminal, const RetSpace& K,
                      const RetSpace& Y, int bound) {
  PullbackRet xk = star(X, terminal, K);
  return internal_hom(xk.sp, Y, bound);
}

}  // namespace fibwise
