#include <algorithm>

#include "polecat/error.hpp"
#include "polecat/tl.hpp"

namespace polecat {

struct TLTerm::Node {
  Kind kind = Kind::identity;
  int source = 0;
  int target = 0;
  int width = 0;
  Side side = Side::east;
  Orient orient = Orient::in;
  StubEnd which = StubEnd::start;
  Scalar factor;
  TLTerm first;
  TLTerm second;
  bool has_stubs = false;
  int crossings = 0;
};

namespace {

const TLTerm& empty_term() {
  static const TLTerm empty;
  return empty;
}

}  // namespace

// A null node stands for id(0).
TLTerm::TLTerm() = default;

TLTerm::TLTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

TLTerm TLTerm::id(int n) {
  if (n < 0) throw StructuralError("id(n) needs n >= 0");
  auto node = std::make_shared<Node>();
  node->source = node->target = node->width = n;
  return TLTerm(std::move(node));
}

TLTerm TLTerm::cup() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::cup;
  n->source = 0;
  n->target = 2;
  return TLTerm(std::move(n));
}

TLTerm TLTerm::cap() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::cap;
  n->source = 2;
  n->target = 0;
  return TLTerm(std::move(n));
}

TLTerm TLTerm::cross_pos() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::cross_pos;
  n->source = n->target = 2;
  n->crossings = 1;
  return TLTerm(std::move(n));
}

TLTerm TLTerm::cross_neg() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::cross_neg;
  n->source = n->target = 2;
  n->crossings = 1;
  return TLTerm(std::move(n));
}

TLTerm TLTerm::stub(Side side, Orient orient, StubEnd which) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::stub;
  n->side = side;
  n->orient = orient;
  n->which = which;
  n->source = which == StubEnd::start ? 0 : 1;
  n->target = which == StubEnd::start ? 1 : 0;
  n->has_stubs = true;
  return TLTerm(std::move(n));
}

TLTerm TLTerm::tensor(const TLTerm& left, const TLTerm& right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::tensor;
  n->source = left.source() + right.source();
  n->target = left.target() + right.target();
  n->first = left;
  n->second = right;
  n->has_stubs = left.has_stubs() || right.has_stubs();
  n->crossings = left.crossing_count() + right.crossing_count();
  return TLTerm(std::move(n));
}

TLTerm TLTerm::stack(const TLTerm& bottom, const TLTerm& top) {
  if (bottom.target() != top.source())
    throw StructuralError("cannot stack a diagram with " + std::to_string(top.source()) +
                          " bottom points on one with " + std::to_string(bottom.target()) +
                          " top points");
  auto n = std::make_shared<Node>();
  n->kind = Kind::stack;
  n->source = bottom.source();
  n->target = top.target();
  n->first = bottom;
  n->second = top;
  n->has_stubs = bottom.has_stubs() || top.has_stubs();
  n->crossings = bottom.crossing_count() + top.crossing_count();
  return TLTerm(std::move(n));
}

TLTerm TLTerm::scale(const Scalar& factor, const TLTerm& operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::scale;
  n->source = operand.source();
  n->target = operand.target();
  n->factor = factor;
  n->first = operand;
  n->has_stubs = operand.has_stubs();
  n->crossings = operand.crossing_count();
  return TLTerm(std::move(n));
}

TLTerm TLTerm::sum(const TLTerm& a, const TLTerm& b) {
  if (a.source() != b.source() || a.target() != b.target())
    throw StructuralError("cannot add diagrams of grades " + std::to_string(a.source()) + "->" +
                          std::to_string(a.target()) + " and " + std::to_string(b.source()) +
                          "->" + std::to_string(b.target()));
  auto n = std::make_shared<Node>();
  n->kind = Kind::sum;
  n->source = a.source();
  n->target = a.target();
  n->first = a;
  n->second = b;
  n->has_stubs = a.has_stubs() || b.has_stubs();
  n->crossings = a.crossing_count() + b.crossing_count();
  return TLTerm(std::move(n));
}

TLTerm::Kind TLTerm::kind() const { return node_ ? node_->kind : Kind::identity; }
int TLTerm::source() const { return node_ ? node_->source : 0; }
int TLTerm::target() const { return node_ ? node_->target : 0; }
int TLTerm::width() const { return node_ ? node_->width : 0; }
const TLTerm& TLTerm::first() const { return node_ ? node_->first : empty_term(); }
const TLTerm& TLTerm::second() const { return node_ ? node_->second : empty_term(); }
const Scalar& TLTerm::factor() const {
  static const Scalar one(1);
  return node_ ? node_->factor : one;
}
Side TLTerm::side() const { return node_ ? node_->side : Side::east; }
Orient TLTerm::orient() const { return node_ ? node_->orient : Orient::in; }
StubEnd TLTerm::stub_end() const { return node_ ? node_->which : StubEnd::start; }
bool TLTerm::has_stubs() const { return node_ && node_->has_stubs; }
int TLTerm::crossing_count() const { return node_ ? node_->crossings : 0; }

bool operator==(const TLTerm& a, const TLTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.source() != b.source() || a.target() != b.target())
    return false;
  switch (a.kind()) {
    case TLTerm::Kind::identity:
    case TLTerm::Kind::cup:
    case TLTerm::Kind::cap:
    case TLTerm::Kind::cross_pos:
    case TLTerm::Kind::cross_neg:
      return true;
    case TLTerm::Kind::stub:
      return a.side() == b.side() && a.orient() == b.orient() && a.stub_end() == b.stub_end();
    case TLTerm::Kind::scale:
      return a.factor() == b.factor() && a.first() == b.first();
    case TLTerm::Kind::tensor:
    case TLTerm::Kind::stack:
    case TLTerm::Kind::sum:
      return a.first() == b.first() && a.second() == b.second();
  }
  return false;
}

std::string to_string(const TLTerm& term) {
  switch (term.kind()) {
    case TLTerm::Kind::identity:
      return "id(" + std::to_string(term.width()) + ")";
    case TLTerm::Kind::cup:
      return "cup";
    case TLTerm::Kind::cap:
      return "cap";
    case TLTerm::Kind::cross_pos:
      return "xp";
    case TLTerm::Kind::cross_neg:
      return "xn";
    case TLTerm::Kind::stub:
      return std::string("stub(") + (term.side() == Side::east ? "e" : "w") + ", " +
             (term.orient() == Orient::in ? "in" : "out") + ", " +
             (term.stub_end() == StubEnd::start ? "start" : "end") + ")";
    case TLTerm::Kind::tensor:
      return "(" + to_string(term.first()) + " @ " + to_string(term.second()) + ")";
    case TLTerm::Kind::stack:
      return "(" + to_string(term.first()) + " ; " + to_string(term.second()) + ")";
    case TLTerm::Kind::sum:
      return "(" + to_string(term.first()) + " + " + to_string(term.second()) + ")";
    case TLTerm::Kind::scale:
      return "((" + term.factor().to_string() + ") * " + to_string(term.first()) + ")";
  }
  return {};
}

}  // namespace polecat
