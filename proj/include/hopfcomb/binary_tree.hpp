#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfcomb/word.hpp"

namespace hopfcomb {

  using Multiplicity = std::uint32_t;

  //! Node label of a binary search tree with multiplicities.
  struct LetterCount {
    Letter       letter       = 1;
    Multiplicity multiplicity = 1;

    friend bool operator==(LetterCount const&, LetterCount const&)  = default;
    friend auto operator<=>(LetterCount const&, LetterCount const&) = default;
  };

  //! Sorted 1-indexed positions recorded at a node of a Q-symbol.
  using PositionSet = std::vector<std::size_t>;

  // Weight of a label; a tree's size is the sum of its node weights.
  inline std::size_t label_weight(Multiplicity m) noexcept {
    return m;
  }
  inline std::size_t label_weight(LetterCount const& lc) noexcept {
    return lc.multiplicity;
  }
  inline std::size_t label_weight(PositionSet const& p) noexcept {
    return p.size();
  }

  //! Immutable planar binary tree with shared structure. Copies are cheap and
  //! never alias mutable state.
  //!
  //! Trees are ordered by (size, root label, left subtree, right subtree),
  //! the empty tree first.
  template <typename Label>
  class BinaryTree {
   public:
    using label_type = Label;

    BinaryTree() = default;

    BinaryTree(Label label, BinaryTree left, BinaryTree right)
        : _node(std::make_shared<Node const>(std::move(label),
                                             std::move(left),
                                             std::move(right))) {}

    [[nodiscard]] bool empty() const noexcept {
      return _node == nullptr;
    }

    [[nodiscard]] Label const& label() const {
      return _node->label;
    }

    [[nodiscard]] BinaryTree const& left() const {
      return _node->left;
    }

    [[nodiscard]] BinaryTree const& right() const {
      return _node->right;
    }

    //! Sum of node weights (multiplicities).
    [[nodiscard]] std::size_t size() const noexcept {
      return _node ? _node->size : 0;
    }

    [[nodiscard]] std::size_t node_count() const noexcept {
      return _node ? _node->node_count : 0;
    }

    //! Same shape, labels mapped through f.
    template <typename F>
    [[nodiscard]] auto transform(F const& f) const
        -> BinaryTree<std::decay_t<decltype(f(std::declval<Label const&>()))>> {
      using Out = BinaryTree<std::decay_t<decltype(f(std::declval<Label const&>()))>>;
      if (empty()) {
        return Out();
      }
      return Out(f(label()), left().transform(f), right().transform(f));
    }

    //! In-order (left, node, right) visit.
    template <typename F>
    void for_each_infix(F&& f) const {
      if (empty()) {
        return;
      }
      left().for_each_infix(f);
      f(*this);
      right().for_each_infix(f);
    }

    //! Pre-order (node, left, right) visit.
    template <typename F>
    void for_each_prefix(F&& f) const {
      if (empty()) {
        return;
      }
      f(*this);
      left().for_each_prefix(f);
      right().for_each_prefix(f);
    }

    friend bool operator==(BinaryTree const& a, BinaryTree const& b) {
      if (a._node == b._node) {
        return true;
      }
      if (a.empty() || b.empty()) {
        return false;
      }
      return a.size() == b.size() && a.label() == b.label()
             && a.left() == b.left() && a.right() == b.right();
    }

    friend std::strong_ordering operator<=>(BinaryTree const& a,
                                            BinaryTree const& b) {
      if (a._node == b._node) {
        return std::strong_ordering::equal;
      }
      if (auto c = a.size() <=> b.size(); c != 0) {
        return c;
      }
      if (a.empty() || b.empty()) {
        return !a.empty() <=> !b.empty();
      }
      if (auto c = compare_labels(a.label(), b.label()); c != 0) {
        return c;
      }
      if (auto c = a.left() <=> b.left(); c != 0) {
        return c;
      }
      return a.right() <=> b.right();
    }

    //! True when both trees have the same shape and node weights.
    template <typename Other>
    [[nodiscard]] bool same_weighted_shape(BinaryTree<Other> const& other) const {
      if (empty() || other.empty()) {
        return empty() && other.empty();
      }
      return label_weight(label()) == label_weight(other.label())
             && left().same_weighted_shape(other.left())
             && right().same_weighted_shape(other.right());
    }

   private:
    static std::strong_ordering compare_labels(Label const& x, Label const& y) {
      if (x < y) {
        return std::strong_ordering::less;
      }
      if (y < x) {
        return std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }

    struct Node {
      Node(Label l, BinaryTree lt, BinaryTree rt)
          : label(std::move(l)),
            left(std::move(lt)),
            right(std::move(rt)),
            size(label_weight(label) + left.size() + right.size()),
            node_count(1 + left.node_count() + right.node_count()) {}

      Label       label;
      BinaryTree  left;
      BinaryTree  right;
      std::size_t size;
      std::size_t node_count;
    };

    std::shared_ptr<Node const> _node;
  };

}  // namespace hopfcomb
