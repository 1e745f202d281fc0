#include "ntrans/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ntrans {

namespace {

void require_admissible(const GradedBasis& gb, const TranslationStructure& ts) {
  TranslationCheck tc = check_n_translation(gb, ts);
  if (!tc.pass()) {
    std::string why = "structure checks fail";
    for (const CheckItem* it : {&tc.maximal_paths, &tc.top_dimension, &tc.pairing})
      if (!it->pass && !it->witnesses.empty()) {
        why += ": " + it->witnesses.front();
        break;
      }
    throw StructureError(why);
  }
  AdmissibleReport ar = check_admissible(gb, ts);
  if (!ar.pass()) {
    std::string why = "not admissible";
    for (const CheckItem* it : {&ar.extension, &ar.shift_span, &ar.stark})
      if (!it->pass && !it->witnesses.empty()) {
        why += ": " + it->witnesses.front();
        break;
      }
    throw StructureError(why);
  }
}

std::string fresh_arrow_name(const BoundQuiver& q, std::string base, const std::string& suffix) {
  while (q.arrow_index(base + suffix) != -1) base += "'";
  return base + suffix;
}

}  // namespace

BoundQuiver trivial_extension(const GradedBasis& gb, const TranslationStructure& ts) {
  const BoundQuiver& q = gb.quiver();
  require_admissible(gb, ts);

  BoundQuiver ext(q.field());
  ext.declared_n = ts.n + 1;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) ext.add_vertex(q.vertex_name(static_cast<int>(v)));
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    ext.add_arrow(q.arrow(static_cast<int>(a)).name, q.arrow(static_cast<int>(a)).source,
                  q.arrow(static_cast<int>(a)).target);

  std::map<int, int> beta;  // vertex -> connector arrow index
  for (const auto& [i, ti] : ts.tau)
    beta[i] = ext.add_arrow(fresh_arrow_name(ext, "b" + q.vertex_name(i), ""), i, ti);

  for (const Element& r : q.relations()) ext.add_relation(r);

  for (const auto& [i, ti] : ts.tau) {
    if (!ts.tau.count(ti)) continue;
    ext.add_relation(ext.make_element(
        {Term{Path{i, {beta.at(i), beta.at(ti)}}, Scalar::one(q.field())}}));
  }

  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(static_cast<int>(a));
    if (!ts.tau.count(ar.source) || !ts.tau.count(ar.target)) continue;
    Element ta = arrow_translation(gb, ts, a);
    std::vector<Term> terms;
    for (const Term& t : ta.terms)
      terms.push_back(Term{Path{ar.source, {beta.at(ar.source), t.path.arrows[0]}}, t.coeff});
    terms.push_back(Term{Path{ar.source, {static_cast<int>(a), beta.at(ar.target)}},
                         Scalar::zero(q.field()) - Scalar::one(q.field())});
    ext.add_relation(ext.make_element(std::move(terms)));
  }

  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    ext.set_translation(static_cast<int>(v), static_cast<int>(v));
  return ext;
}

BoundQuiver smash_extension(const GradedBasis& gb, const TranslationStructure& ts,
                            const SmashOptions& opt) {
  const BoundQuiver& q = gb.quiver();
  require_admissible(gb, ts);
  if (opt.order < 0) throw std::invalid_argument("layer order must be >= 0");
  if (opt.order == 0 && opt.window_lo > opt.window_hi)
    throw std::invalid_argument("empty layer window");
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (q.vertex_name(static_cast<int>(v)).find('@') != std::string::npos)
      throw std::invalid_argument("layered names need '@'-free input vertex names");

  const bool cyclic = opt.order >= 1;
  std::vector<int> layers;
  if (cyclic)
    for (int t = 0; t < opt.order; ++t) layers.push_back(t);
  else
    for (int t = opt.window_lo; t <= opt.window_hi; ++t) layers.push_back(t);

  auto wrap = [&](int t) {
    if (!cyclic) return t;
    int m = ((t % opt.order) + opt.order) % opt.order;
    return m;
  };
  auto has_layer = [&](int t) {
    return cyclic || (t >= opt.window_lo && t <= opt.window_hi);
  };

  BoundQuiver ext(q.field());
  ext.declared_n = ts.n + 1;
  if (!cyclic)
    ext.metadata.push_back("window " + std::to_string(opt.window_lo) + ".." +
                           std::to_string(opt.window_hi) +
                           " of the unbounded layering; relations touching missing layers dropped");

  const int nv = static_cast<int>(q.num_vertices());
  auto vid = [&](int v, int t) {
    int pos = cyclic ? wrap(t) : t - opt.window_lo;
    return pos * nv + v;
  };
  for (int t : layers)
    for (int v = 0; v < nv; ++v) ext.add_vertex(q.vertex_name(v) + "@" + std::to_string(t));

  const int na = static_cast<int>(q.num_arrows());
  auto aid = [&](int a, int t) {
    int pos = cyclic ? wrap(t) : t - opt.window_lo;
    return pos * na + a;
  };
  for (int t : layers)
    for (int a = 0; a < na; ++a)
      ext.add_arrow(q.arrow(a).name + "@" + std::to_string(t), vid(q.arrow(a).source, t),
                    vid(q.arrow(a).target, t));

  // Connectors cross layers: (i, t-1) -> (tau i, t).
  std::map<std::pair<int, int>, int> beta;  // (vertex, target layer) -> arrow id
  for (int t : layers) {
    if (!has_layer(t - 1)) continue;
    for (const auto& [i, ti] : ts.tau)
      beta[{i, wrap(t)}] = ext.add_arrow(
          fresh_arrow_name(ext, "b" + q.vertex_name(i), "@" + std::to_string(t)),
          vid(i, t - 1), vid(ti, t));
  }

  for (int t : layers)
    for (const Element& r : q.relations()) {
      std::vector<Term> terms;
      for (const Term& tm : r.terms) {
        std::vector<int> arrows;
        for (int a : tm.path.arrows) arrows.push_back(aid(a, t));
        terms.push_back(Term{Path{vid(tm.path.source, t), arrows}, tm.coeff});
      }
      ext.add_relation(ext.make_element(std::move(terms)));
    }

  for (int t : layers) {
    if (!has_layer(t - 1) || !has_layer(t + 1)) continue;
    for (const auto& [i, ti] : ts.tau) {
      if (!ts.tau.count(ti)) continue;
      ext.add_relation(ext.make_element(
          {Term{Path{vid(i, t - 1), {beta.at({i, wrap(t)}), beta.at({ti, wrap(t + 1)})}},
                Scalar::one(q.field())}}));
    }
  }

  for (int t : layers) {
    if (!has_layer(t - 1)) continue;
    for (int a = 0; a < na; ++a) {
      const Arrow& ar = q.arrow(a);
      if (!ts.tau.count(ar.source) || !ts.tau.count(ar.target)) continue;
      Element ta = arrow_translation(gb, ts, static_cast<std::size_t>(a));
      std::vector<Term> terms;
      for (const Term& tm : ta.terms)
        terms.push_back(Term{
            Path{vid(ar.source, t - 1), {beta.at({ar.source, wrap(t)}), aid(tm.path.arrows[0], t)}},
            tm.coeff});
      terms.push_back(Term{Path{vid(ar.source, t - 1), {aid(a, t - 1), beta.at({ar.target, wrap(t)})}},
                           Scalar::zero(q.field()) - Scalar::one(q.field())});
      ext.add_relation(ext.make_element(std::move(terms)));
    }
  }

  for (int t : layers) {
    if (!has_layer(t - 1)) continue;
    for (int v = 0; v < nv; ++v) ext.set_translation(vid(v, t), vid(v, t - 1));
  }
  return ext;
}

ExtendableReport is_extendable(const GradedBasis& gb, const TranslationStructure& ts, int cap) {
  ExtendableReport rep;
  BoundQuiver ext;
  try {
    ext = trivial_extension(gb, ts);
  } catch (const StructureError& e) {
    rep.notes.push_back(e.what());
    return rep;
  }
  rep.admissible = true;

  int need = std::max(cap, ts.n + 3);
  GradedBasis gb2 = GradedBasis::compute(ext, need);
  TranslationStructure ts2;
  try {
    ts2 = infer_translation(gb2, ts.n + 1);
  } catch (const StructureError& e) {
    rep.notes.push_back(e.what());
    return rep;
  }
  rep.extension_check = check_n_translation(gb2, ts2);
  rep.extension_koszul = classify_pq(gb2);
  rep.extendable = n_translation_algebra_verdict(rep.extension_koszul, rep.extension_check);
  if (!rep.extendable) {
    if (!rep.extension_check.pass())
      rep.notes.push_back("extension fails the structure checks");
    else
      rep.notes.push_back("extension complex is not exact or almost-Koszul within the cap");
  }
  return rep;
}

}  // namespace ntrans
