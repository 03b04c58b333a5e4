#include "treecalc/combinat/trees.hpp"

#include <algorithm>
#include <stdexcept>

#include "treecalc/errors.hpp"

namespace treecalc {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c)
    {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void finish() const
    {
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
    }

    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError("tree '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

BinaryTree parse_binary(Cursor &in)
{
    if (in.peek() == '_') {
        in.expect('_');
        return {};
    }
    in.expect('(');
    BinaryTree left = parse_binary(in);
    in.expect(',');
    BinaryTree right = parse_binary(in);
    in.expect(')');
    return BinaryTree::node(std::move(left), std::move(right));
}

MAryTree parse_mary(std::size_t m, Cursor &in)
{
    if (in.peek() == '_') {
        in.expect('_');
        return MAryTree(m);
    }
    in.expect('(');
    std::vector<MAryTree> children;
    for (std::size_t i = 0; i <= m; ++i) {
        children.push_back(parse_mary(m, in));
    }
    in.expect(')');
    return MAryTree::node(m, std::move(children));
}

PlaneTree parse_plane(Cursor &in)
{
    if (in.peek() == '*') {
        in.expect('*');
        return {};
    }
    in.expect('(');
    std::vector<PlaneTree> children;
    while (in.peek() == '(' || in.peek() == '*') {
        children.push_back(parse_plane(in));
    }
    if (children.size() < 2) {
        in.fail("internal node needs at least two children");
    }
    in.expect(')');
    return PlaneTree::internal(std::move(children));
}

void collect_hooks(const BinaryTree &t, HookData &out)
{
    if (t.empty()) {
        return;
    }
    out.hooks.push_back(t.size());
    out.right_sizes.push_back(t.right().size());
    collect_hooks(t.left(), out);
    collect_hooks(t.right(), out);
}

void collect_hooks(const MAryTree &t, HookData &out)
{
    if (t.empty()) {
        return;
    }
    out.hooks.push_back(t.size());
    for (const auto &c : t.children()) {
        collect_hooks(c, out);
    }
}

BinaryTree decreasing_shape(std::span<const int> w)
{
    if (w.empty()) {
        return {};
    }
    const auto top = std::max_element(w.begin(), w.end());
    const auto split = static_cast<std::size_t>(top - w.begin());
    return BinaryTree::node(decreasing_shape(w.first(split)), decreasing_shape(w.subspan(split + 1)));
}

} // namespace

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right)
{
    BinaryTree t;
    t.size_ = 1 + left.size_ + right.size_;
    t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right)});
    return t;
}

BinaryTree BinaryTree::parse(std::string_view text)
{
    Cursor in(text);
    BinaryTree t = parse_binary(in);
    in.finish();
    return t;
}

void BinaryTree::encode_into(std::string &out) const
{
    if (empty()) {
        out.push_back('_');
        return;
    }
    out.push_back('(');
    left().encode_into(out);
    out.push_back(',');
    right().encode_into(out);
    out.push_back(')');
}

std::string BinaryTree::encode() const
{
    std::string out;
    out.reserve(4 * size_ + 1);
    encode_into(out);
    return out;
}

bool operator==(const BinaryTree &a, const BinaryTree &b)
{
    if (a.size_ != b.size_) {
        return false;
    }
    if (a.node_ == b.node_) {
        return true;
    }
    return a.left() == b.left() && a.right() == b.right();
}

MAryTree MAryTree::node(std::size_t m, std::vector<MAryTree> children)
{
    if (children.size() != m + 1) {
        throw std::invalid_argument("m-ary node needs exactly m+1 children");
    }
    MAryTree t(m);
    t.size_ = 1;
    for (const auto &c : children) {
        if (c.m_ != m) {
            throw std::invalid_argument("child arity parameter mismatch");
        }
        t.size_ += c.size_;
    }
    t.children_ = std::make_shared<const std::vector<MAryTree>>(std::move(children));
    return t;
}

MAryTree MAryTree::parse(std::size_t m, std::string_view text)
{
    Cursor in(text);
    MAryTree t = parse_mary(m, in);
    in.finish();
    return t;
}

void MAryTree::encode_into(std::string &out) const
{
    if (empty()) {
        out.push_back('_');
        return;
    }
    out.push_back('(');
    for (const auto &c : children()) {
        c.encode_into(out);
    }
    out.push_back(')');
}

std::string MAryTree::encode() const
{
    std::string out;
    encode_into(out);
    return out;
}

bool operator==(const MAryTree &a, const MAryTree &b)
{
    if (a.m_ != b.m_ || a.size_ != b.size_) {
        return false;
    }
    if (a.children_ == b.children_) {
        return true;
    }
    return a.children() == b.children();
}

PlaneTree PlaneTree::internal(std::vector<PlaneTree> children)
{
    if (children.size() < 2) {
        throw std::invalid_argument("plane tree internal node needs at least two children");
    }
    PlaneTree t;
    t.internal_ = 1;
    t.leaves_ = 0;
    for (const auto &c : children) {
        t.internal_ += c.internal_;
        t.leaves_ += c.leaves_;
    }
    t.children_ = std::make_shared<const std::vector<PlaneTree>>(std::move(children));
    return t;
}

PlaneTree PlaneTree::parse(std::string_view text)
{
    Cursor in(text);
    PlaneTree t = parse_plane(in);
    in.finish();
    return t;
}

void PlaneTree::encode_into(std::string &out) const
{
    if (is_leaf()) {
        out.push_back('*');
        return;
    }
    out.push_back('(');
    for (const auto &c : children()) {
        c.encode_into(out);
    }
    out.push_back(')');
}

std::string PlaneTree::encode() const
{
    std::string out;
    encode_into(out);
    return out;
}

bool operator==(const PlaneTree &a, const PlaneTree &b)
{
    if (a.internal_ != b.internal_ || a.leaves_ != b.leaves_) {
        return false;
    }
    if (a.children_ == b.children_) {
        return true;
    }
    return a.children() == b.children();
}

HookData hook_data(const BinaryTree &t)
{
    if (t.empty()) {
        throw std::invalid_argument("hook_data: empty tree");
    }
    HookData out;
    collect_hooks(t, out);
    std::sort(out.hooks.begin(), out.hooks.end());
    std::sort(out.right_sizes.begin(), out.right_sizes.end());
    return out;
}

HookData hook_data(const MAryTree &t)
{
    if (t.empty()) {
        throw std::invalid_argument("hook_data: empty tree");
    }
    HookData out;
    collect_hooks(t, out);
    std::sort(out.hooks.begin(), out.hooks.end());
    return out;
}

BinaryTree decreasing_tree(const Permutation &p) { return decreasing_shape(p.letters()); }

PlaneTree plane_tree_of_word(std::span<const int> w)
{
    if (w.empty()) {
        return {};
    }
    const int top = *std::max_element(w.begin(), w.end());
    std::vector<PlaneTree> blocks;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= w.size(); ++i) {
        if (i == w.size() || w[i] == top) {
            blocks.push_back(plane_tree_of_word(w.subspan(start, i - start)));
            start = i + 1;
        }
    }
    return PlaneTree::internal(std::move(blocks));
}

} // namespace treecalc
