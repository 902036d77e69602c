// Text forms of algebra elements.  Output is accepted back by the parser
// (except tensors, which have no input syntax).

#include "polecat/halg.hpp"
#include "polecat/linear.hpp"
#include "polecat/pbw.hpp"
#include "polecat/uq.hpp"

namespace polecat {

std::string render_term(const Scalar& c, const std::string& body) {
  const std::string cs = c.to_string();
  if (body == "1") return cs;
  if (c.is_one()) return body;
  if (cs == "-1") return "-" + body;
  if (cs.find(' ') != std::string::npos) return "(" + cs + ") * " + body;
  return cs + " * " + body;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const std::string& t : terms) {
    if (!out.empty()) out += " + ";
    out += t;
  }
  return out;
}

std::string to_string(const HWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (HGen g : w) {
    if (!out.empty()) out += ' ';
    out += gen_name(g);
  }
  return out;
}

std::string to_string(const HElement& x) {
  std::vector<std::string> terms;
  for (const auto& [w, c] : x) terms.push_back(render_term(c, to_string(w)));
  return join_terms(terms);
}

std::string to_string(const HTensor& x) {
  std::vector<std::string> terms;
  for (const auto& [key, c] : x.sum()) {
    std::string body;
    for (const HWord& w : key) {
      if (!body.empty()) body += " @ ";
      body += to_string(w);
    }
    if (key.size() > 1 && !c.is_one()) body = "(" + body + ")";
    terms.push_back(render_term(c, body));
  }
  return join_terms(terms);
}

std::string to_string(const PBWMonomial& m) {
  return "f^" + std::to_string(m.a) + " k^" + std::to_string(m.b) + " e^" + std::to_string(m.c);
}

std::string to_string(const PBWElement& x) {
  std::vector<std::string> terms;
  // Highest monomials first reads more naturally.
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    terms.push_back(render_term(it->second, to_string(it->first)));
  return join_terms(terms);
}

std::string to_string(const PBWTensor& x) {
  std::vector<std::string> terms;
  for (const auto& [key, c] : x) {
    std::string body;
    for (const PBWMonomial& m : key) {
      if (!body.empty()) body += " @ ";
      body += to_string(m);
    }
    terms.push_back(render_term(c, "(" + body + ")"));
  }
  return join_terms(terms);
}

std::string to_string(const UqWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (UqGen g : w) {
    if (!out.empty()) out += ' ';
    out += uq_name(g);
  }
  return out;
}

std::string to_string(const UqElement& x) {
  std::vector<std::string> terms;
  for (const auto& [w, c] : x) terms.push_back(render_term(c, to_string(w)));
  return join_terms(terms);
}

}  // namespace polecat
