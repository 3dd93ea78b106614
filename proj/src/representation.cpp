#include "orthoposet/representation.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace orthoposet {

void RepVector::add(int member, HeckeElement coeff) {
  if (coeff.is_zero()) return;
  auto it = terms.find(member);
  if (it == terms.end()) {
    terms.emplace(member, std::move(coeff));
    return;
  }
  it->second = hecke_add(it->second, coeff);
  if (it->second.is_zero()) terms.erase(it);
}

RepVector rep_basis(const HeckeContext& ctx, int member) {
  RepVector v;
  v.terms.emplace(member, hecke_one(ctx));
  return v;
}

RepVector rep_scale(const HeckeContext& ctx, const RepVector& v, const HeckeElement& z) {
  RepVector r;
  for (const auto& [m, coeff] : v.terms) r.add(m, hecke_mul(ctx, coeff, z));
  return r;
}

RepVector tau(const MonoidalPoset& p, const HTable& ht, const HeckeContext& ctx,
              int node, const RepVector& v) {
  RepVector out;
  const PolyM neg_m = -PolyM::m();
  for (const auto& [m, z] : v.terms) {
    switch (p.cls(m, node)) {
      case EdgeClass::FixesInB:
        break;
      case EdgeClass::FixesPerp:
        out.add(m, hecke_mul(ctx, hecke_gen(ctx, ht.entry(m, node)), z));
        break;
      case EdgeClass::Lowers:
        out.add(p.orbit.edge(m, node), z);
        break;
      case EdgeClass::Raises:
        out.add(p.orbit.edge(m, node), z);
        out.add(m, hecke_scale(z, neg_m));
        break;
    }
  }
  return out;
}

RepVector tau_word(const MonoidalPoset& p, const HTable& ht, const HeckeContext& ctx,
                   const std::vector<int>& word, const RepVector& v) {
  RepVector cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = tau(p, ht, ctx, *it, cur);
  return cur;
}

namespace {

std::string rep_to_string(const MonoidalPoset& p, const HeckeContext& ctx,
                          const RepVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, z] : v.terms) {
    if (!first) os << " + ";
    first = false;
    os << "x[" << m << "]*(" << hecke_to_string(ctx, z) << ")";
  }
  (void)p;
  return os.str();
}

void monitor(const HeckeContext& ctx, const RepVector& v, RepReport& rep) {
  for (const auto& [m, z] : v.terms) {
    rep.max_word_length = std::max(rep.max_word_length, hecke_max_word_length(ctx, z));
    for (const auto& [w, poly] : z.terms)
      rep.max_coeff_degree = std::max(rep.max_coeff_degree, poly.degree());
  }
}

void verify_range(const MonoidalPoset& p, const HTable& ht, const HeckeContext& ctx,
                  int begin, int end, RepReport& rep) {
  const RootSystem& rs = *p.rs;
  const int n = rs.rank();
  for (int m = begin; m < end; ++m) {
    RepVector x = rep_basis(ctx, m);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        ++rep.pairs_checked;
        RepVector lhs, rhs;
        if (!rs.dtype().adjacent(i, j)) {
          lhs = tau_word(p, ht, ctx, {i, j}, x);
          rhs = tau_word(p, ht, ctx, {j, i}, x);
        } else {
          lhs = tau_word(p, ht, ctx, {i, j, i}, x);
          rhs = tau_word(p, ht, ctx, {j, i, j}, x);
        }
        monitor(ctx, lhs, rep);
        monitor(ctx, rhs, rep);
        if (!(lhs == rhs)) {
          ++rep.failure_count;
          if (rep.failures.size() < 32)
            rep.failures.push_back({i, j, m, rep_to_string(p, ctx, lhs),
                                    rep_to_string(p, ctx, rhs)});
        }
      }
  }
}

}  // namespace

RepReport verify_braid(const MonoidalPoset& p, const HTable& ht, const HeckeContext& ctx,
                       int jobs) {
  const int size = p.size();
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, std::max(1, size / 64));
  if (jobs <= 1) {
    RepReport rep;
    verify_range(p, ht, ctx, 0, size, rep);
    return rep;
  }
  std::vector<RepReport> parts(jobs);
  std::vector<std::thread> threads;
  int chunk = (size + jobs - 1) / jobs;
  for (int t = 0; t < jobs; ++t) {
    int begin = t * chunk, end = std::min(size, begin + chunk);
    threads.emplace_back([&, begin, end, t] {
      verify_range(p, ht, ctx, begin, end, parts[t]);
    });
  }
  for (auto& th : threads) th.join();
  RepReport rep;
  for (const RepReport& part : parts) {
    rep.pairs_checked += part.pairs_checked;
    rep.failure_count += part.failure_count;
    rep.max_coeff_degree = std::max(rep.max_coeff_degree, part.max_coeff_degree);
    rep.max_word_length = std::max(rep.max_word_length, part.max_word_length);
    for (const BraidFailure& f : part.failures)
      if (rep.failures.size() < 32) rep.failures.push_back(f);
  }
  return rep;
}

GeneratorMatrix matrix_of_generator(const MonoidalPoset& p, const HTable& ht,
                                    const HeckeContext& ctx, int node) {
  GeneratorMatrix mat;
  mat.node = node;
  mat.columns.resize(p.size());
  for (int m = 0; m < p.size(); ++m) {
    RepVector img = tau(p, ht, ctx, node, rep_basis(ctx, m));
    for (const auto& [row, coeff] : img.terms) mat.columns[m].emplace_back(row, coeff);
  }
  return mat;
}

GeneratorMatrix matrix_mul(const HeckeContext& ctx, const GeneratorMatrix& a,
                           const GeneratorMatrix& b) {
  GeneratorMatrix out;
  out.node = -1;
  out.columns.resize(b.columns.size());
  for (size_t c = 0; c < b.columns.size(); ++c) {
    std::map<int, HeckeElement> acc;
    for (const auto& [k, zb] : b.columns[c])
      for (const auto& [r, za] : a.columns[k]) {
        HeckeElement prod = hecke_mul(ctx, za, zb);
        auto [it, fresh] = acc.emplace(r, prod);
        if (!fresh) it->second = hecke_add(it->second, prod);
      }
    for (auto& [r, z] : acc)
      if (!z.is_zero()) out.columns[c].emplace_back(r, z);
  }
  return out;
}

std::string matrices_to_json(const MonoidalPoset& p, const HTable& ht,
                              const HeckeContext& ctx) {
  std::ostringstream os;
  os << "{\"diagram\": \"" << p.rs->dtype().name() << "\", \"orbit_size\": " << p.size()
     << ", \"generators\": [";
  for (int i = 1; i <= p.rs->rank(); ++i) {
    if (i > 1) os << ", ";
    GeneratorMatrix mat = matrix_of_generator(p, ht, ctx, i);
    os << "{\"node\": " << i << ", \"columns\": [";
    for (int c = 0; c < p.size(); ++c) {
      if (c) os << ", ";
      os << "{\"member\": " << c << ", \"entries\": [";
      for (size_t e = 0; e < mat.columns[c].size(); ++e) {
        if (e) os << ", ";
        os << "{\"row\": " << mat.columns[c][e].first
           << ", \"coeff\": " << hecke_to_json(ctx, mat.columns[c][e].second) << "}";
      }
      os << "]}";
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

std::string rep_report_summary(const MonoidalPoset& p, const RepReport& rep) {
  std::ostringstream os;
  os << p.rs->dtype().name() << " orbit of " << p.size() << " members: "
     << rep.pairs_checked << " relation instances checked, " << rep.failure_count
     << " failures (max coefficient degree " << rep.max_coeff_degree
     << ", max T-word length " << rep.max_word_length << ")";
  if (!rep.failures.empty()) {
    os << "\nfirst failures:";
    for (const BraidFailure& f : rep.failures) {
      os << "\n  pair (" << f.i << "," << f.j << ") at member " << f.member
         << ":\n    lhs = " << f.lhs << "\n    rhs = " << f.rhs;
      if (os.tellp() > 4000) break;
    }
  }
  return os.str();
}

}  // namespace orthoposet
