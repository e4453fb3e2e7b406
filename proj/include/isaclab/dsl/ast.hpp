#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace isaclab::dsl {

enum class NodeKind {
  kConstant,
  kFeature,
  kNeg,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kPow,
  kLog10,
  kLn,
  kExp,
  kAbs,
  kTanh,
  kMin,
  kMax,
  kClip,
};

struct Node {
  NodeKind kind = NodeKind::kConstant;
  double value = 0.0;         // kConstant
  std::string feature;        // kFeature
  double lo = 0.0, hi = 0.0;  // kClip bounds
  std::vector<Node> children;
};

int arity(NodeKind kind);
const char* kind_name(NodeKind kind);

/// Scalar reward expression over named environment features. Immutable
/// after construction; construction canonicalizes Neg(Constant) into a
/// signed constant and enforces the structural limits.
class RewardExpr {
 public:
  static constexpr int kMaxDepth = 32;
  static constexpr int kMaxNodes = 512;

  /// Throws std::invalid_argument when the tree violates an invariant
  /// (limits, arity, clip bounds, unknown feature name).
  explicit RewardExpr(Node root);
  RewardExpr(Node root, const std::vector<std::string>& allowed_features);

  const Node& root() const { return root_; }
  int node_count() const { return node_count_; }
  int depth() const { return depth_; }

  /// Sorted unique feature names referenced by the expression.
  std::vector<std::string> features() const;

  bool structurally_equal(const RewardExpr& other) const;

 private:
  Node root_;
  int node_count_ = 0;
  int depth_ = 0;
};

bool nodes_equal(const Node& a, const Node& b);

}  // namespace isaclab::dsl
