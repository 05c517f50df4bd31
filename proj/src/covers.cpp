#include "veech/covers.hpp"

#include "veech/error.hpp"

#include <map>
#include <numeric>
#include <set>
#include <string>

namespace veech {

void MonodromyCover::validate() const {
  if (n < 1) throw Error(ErrorKind::validation, "cover rank must be positive");
  if (degree < 1) throw Error(ErrorKind::validation, "cover degree must be >= 1");
  if (perms.size() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::validation, "expected " + std::to_string(n) + " permutations, got " +
                                           std::to_string(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (!is_bijection(perms[i], degree))
      throw Error(ErrorKind::validation, "permutation " + std::to_string(i + 1) + " is not a bijection of {1.." +
                                             std::to_string(degree) + "}");
  if (basepoint >= degree) throw Error(ErrorKind::validation, "basepoint outside the fiber");
  if (!is_transitive(perms, degree)) throw Error(ErrorKind::disconnected_cover, "disconnected cover");
}

void AbelianCoverSpec::validate() const {
  if (n < 1) throw Error(ErrorKind::validation, "cover rank must be positive");
  if (d < 1) throw Error(ErrorKind::validation, "exponent d must be >= 1");
  for (const auto& v : generators) {
    if (v.size() != n) throw Error(ErrorKind::validation, "V generator has length " + std::to_string(v.size()) +
                                                              ", expected " + std::to_string(n));
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i) < 0 || v(i) >= d) throw Error(ErrorKind::validation, "V entries must lie in 0..d-1");
  }
}

int rank_of(const CoverSpec& spec) {
  return std::visit([](const auto& c) { return c.n; }, spec);
}

SubgroupCanonicalForm canonical_subgroup(const AbelianCoverSpec& spec) {
  spec.validate();
  return canonicalize(spec.generators, spec.d, spec.n);
}

std::vector<std::uint64_t> generator_orders(const AbelianCoverSpec& spec) {
  const auto form = canonical_subgroup(spec);
  std::vector<std::uint64_t> orders;
  for (int i = 0; i < spec.n; ++i) {
    VectorModD e = VectorModD::Zero(spec.n);
    std::uint64_t k = 1;
    for (e(i) = 1; !form.contains(e); ++k) e(i) += 1;
    orders.push_back(k);
  }
  return orders;
}

MonodromyCover to_monodromy(const AbelianCoverSpec& spec, std::uint64_t max_degree) {
  const auto form = canonical_subgroup(spec);
  const auto n = spec.n;
  std::map<std::vector<std::int64_t>, std::uint32_t> index;
  std::vector<VectorModD> points;
  auto key = [](const VectorModD& v) { return std::vector<std::int64_t>(v.data(), v.data() + v.size()); };

  points.push_back(VectorModD::Zero(n));
  index.emplace(key(points.front()), 0);
  std::vector<std::vector<std::uint32_t>> images(static_cast<std::size_t>(n));
  for (std::size_t head = 0; head < points.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      VectorModD next = points[head];
      next(i) += 1;
      next = form.reduce(next);
      auto [it, inserted] = index.emplace(key(next), static_cast<std::uint32_t>(points.size()));
      if (inserted) {
        if (points.size() + 1 > max_degree)
          throw Error(ErrorKind::validation, "abelian cover degree exceeds " + std::to_string(max_degree));
        points.push_back(next);
      }
      images[static_cast<std::size_t>(i)].push_back(it->second);
    }
  }

  MonodromyCover cover;
  cover.n = n;
  cover.degree = static_cast<std::uint32_t>(points.size());
  cover.perms.assign(images.begin(), images.end());
  cover.basepoint = 0;
  return cover;
}

CoverStructure analyze(const MonodromyCover& cover) {
  cover.validate();
  CoverStructure out;
  for (const auto& p : cover.perms) out.generator_orders.push_back(order(p));

  const auto base_encoding = rooted_encoding(cover.perms, cover.basepoint);
  out.is_galois = true;
  for (std::uint32_t p = 0; p < cover.degree && out.is_galois; ++p)
    out.is_galois = matches_encoding(cover.perms, p, base_encoding);

  bool commuting = true;
  for (std::size_t i = 0; i < cover.perms.size() && commuting; ++i)
    for (std::size_t j = i + 1; j < cover.perms.size() && commuting; ++j)
      commuting = compose(cover.perms[i], cover.perms[j]) == compose(cover.perms[j], cover.perms[i]);
  out.deck_abelian = out.is_galois && commuting;
  if (!out.deck_abelian) return out;

  std::int64_t d = 1;
  for (auto o : out.generator_orders) d = std::lcm(d, static_cast<std::int64_t>(o));
  out.exponent = d;
  const std::set<std::uint64_t> distinct(out.generator_orders.begin(), out.generator_orders.end());
  out.order_condition = distinct == std::set<std::uint64_t>{static_cast<std::uint64_t>(d)} ||
                        distinct == std::set<std::uint64_t>{1, static_cast<std::uint64_t>(d)};

  // nu of the Schreier generators u_p x_i u_q^-1 of the basepoint stabilizer
  const int n = cover.n;
  std::vector<std::optional<VectorModD>> tree(cover.degree);
  std::vector<std::uint32_t> queue{cover.basepoint};
  tree[cover.basepoint] = VectorModD::Zero(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto p = queue[head];
    for (int i = 0; i < n; ++i) {
      const auto q = cover.perms[static_cast<std::size_t>(i)][p];
      if (!tree[q]) {
        VectorModD v = *tree[p];
        v(i) = mod<std::int64_t>(v(i) + 1, d);
        tree[q] = v;
        queue.push_back(q);
      }
    }
  }
  std::vector<VectorModD> schreier;
  for (std::uint32_t p = 0; p < cover.degree; ++p) {
    for (int i = 0; i < n; ++i) {
      const auto q = cover.perms[static_cast<std::size_t>(i)][p];
      VectorModD v = *tree[p] - *tree[q];
      v(i) += 1;
      v = reduced(v, d);
      if (!v.isZero()) schreier.push_back(v);
    }
  }
  out.V = canonicalize(schreier, d, n);
  return out;
}

namespace {

template <typename T>
T require(const nlohmann::ordered_json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::parse, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

CoverSpec parse_cover_spec(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "cover spec must be a JSON object");
  const int n = require<int>(j, "n");
  if (!j.contains("cover") || !j.at("cover").is_object()) throw Error(ErrorKind::parse, "missing object 'cover'");
  const auto& c = j.at("cover");
  const auto type = require<std::string>(c, "type");

  if (type == "monodromy") {
    MonodromyCover cover;
    cover.n = n;
    const auto degree = require<long long>(c, "degree");
    if (degree < 1) throw Error(ErrorKind::validation, "cover degree must be >= 1");
    cover.degree = static_cast<std::uint32_t>(degree);
    for (const auto& row : require<std::vector<std::vector<long long>>>(c, "perms")) {
      Permutation p;
      for (auto x : row) {
        if (x < 1 || x > degree) throw Error(ErrorKind::validation, "permutation image out of range 1..degree");
        p.push_back(static_cast<std::uint32_t>(x - 1));
      }
      cover.perms.push_back(std::move(p));
    }
    if (c.contains("basepoint")) {
      const auto b = require<long long>(c, "basepoint");
      if (b < 1 || b > degree) throw Error(ErrorKind::validation, "basepoint out of range 1..degree");
      cover.basepoint = static_cast<std::uint32_t>(b - 1);
    }
    cover.validate();
    return cover;
  }
  if (type == "abelian") {
    AbelianCoverSpec spec;
    spec.n = n;
    spec.d = require<std::int64_t>(c, "d");
    for (const auto& row : require<std::vector<std::vector<std::int64_t>>>(c, "V")) {
      VectorModD v(static_cast<Eigen::Index>(row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) v(static_cast<Eigen::Index>(i)) = row[i];
      spec.generators.push_back(std::move(v));
    }
    spec.validate();
    return spec;
  }
  throw Error(ErrorKind::parse, "unknown cover type '" + type + "'");
}

nlohmann::ordered_json to_json(const CoverSpec& spec) {
  nlohmann::ordered_json j;
  j["n"] = rank_of(spec);
  nlohmann::ordered_json c;
  if (const auto* m = std::get_if<MonodromyCover>(&spec)) {
    c["type"] = "monodromy";
    c["degree"] = m->degree;
    nlohmann::ordered_json perms = nlohmann::ordered_json::array();
    for (const auto& p : m->perms) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (auto x : p) row.push_back(x + 1);
      perms.push_back(std::move(row));
    }
    c["perms"] = std::move(perms);
    if (m->basepoint != 0) c["basepoint"] = m->basepoint + 1;
  } else {
    const auto& a = std::get<AbelianCoverSpec>(spec);
    c["type"] = "abelian";
    c["d"] = a.d;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& v : a.generators) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v(i));
      rows.push_back(std::move(row));
    }
    c["V"] = std::move(rows);
  }
  j["cover"] = std::move(c);
  return j;
}

}  // namespace veech
