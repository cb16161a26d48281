#include <json.hpp>

#include "charp/error.hpp"
#include "charp/gallery.hpp"

namespace charp {

void StarReport::add(std::string name, bool ok, MultiPoly residual, std::string note) {
  entries.push_back({std::move(name), ok, std::move(residual), std::move(note)});
}

bool StarReport::all_ok() const {
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

const StarEntry& StarReport::at(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  fail(Errc::BadParameters, "no report entry " + std::string(name));
}

std::string StarReport::to_json(std::size_t max_residual) const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json x;
    x["name"] = e.name;
    x["ok"] = e.ok;
    std::string res = e.residual.vars() ? e.residual.to_string() : std::string("0");
    if (res.size() > max_residual) res = res.substr(0, max_residual) + " ... (" + std::to_string(e.residual.size()) + " terms)";
    x["residual"] = res;
    if (!e.note.empty()) x["note"] = e.note;
    j.push_back(std::move(x));
  }
  return j.dump();
}

TriangularExample build_example_triangular(unsigned p) {
  if (p != 2 && p != 3 && p != 5) fail(Errc::UnsupportedP, std::to_string(p));
  TriangularExample ex;
  ex.vt = VarTable::make(p, {"x1", "x2", "x3"});
  const auto& vt = ex.vt;
  const MultiPoly x1 = MultiPoly::var(vt, 0), x2 = MultiPoly::var(vt, 1), x3 = MultiPoly::var(vt, 2);
  const MultiPoly T = MultiPoly::var(vt, vt->T());
  const Coefficient a = Coefficient::u_pow(1, p), ainv = a.inv();
  ex.lambda = pow(x1, p + 1).scaled(ainv);
  ex.mu = (pow(x1, p + 1) * pow(x2, p) - pow(x1, p * p + 1) * x2).scaled(ainv);
  if (p == 2) ex.mu -= pow(x1, 8).scaled(ainv * ainv);
  const PolyMap coords(vt, {x1, x2 + ex.lambda, x3 + ex.mu});
  ex.action = slice_action({coords, T.scaled(a), {}}, CoeffRing::field());
  ex.sigma = ex.action.evaluate(1);

  auto& rep = ex.report;
  const AxiomReport ax = check_axioms(vt, ex.action.images());
  rep.add("axioms", ax.ok(), MultiPoly(vt), ax.witness);
  const MultiPoly& e2 = ex.action[1];
  rep.add("iii", is_polynomial_over(e2, CoeffRing::R(), false).ok, e2, "E(x2) in R[x][T]");
  const MultiPoly r4 = ex.action[2] - (pow(x1, 1 + p + p * p) * (pow(T, p) - T)).scaled(ainv);
  rep.add("iv", is_polynomial_over(r4, CoeffRing::R(), false).ok, r4, "E(x3) - a^-1 x1^(1+p+p^2)(T^p - T) in R[x][T]");
  bool e1 = true;
  for (const auto& g : ex.sigma.images()) e1 = e1 && is_polynomial_over(g, CoeffRing::R(), false).ok;
  rep.add("E1 restricts", e1, MultiPoly(vt));
  const auto ord = order_up_to(ex.sigma, static_cast<int>(p));
  rep.add("E1 order p", ord && *ord == static_cast<int>(p), MultiPoly(vt), ord ? std::to_string(*ord) : "none");
  ex.witness = ex.action.restricts_to(CoeffRing::R());
  const bool polar = !ex.witness.ok && ex.witness.term && u_valuation(*ex.witness.term) < 0;
  rep.add("E does not restrict", polar, ex.witness.term ? *ex.witness.term : MultiPoly(vt), ex.witness.to_string());
  return ex;
}

}  // namespace charp
