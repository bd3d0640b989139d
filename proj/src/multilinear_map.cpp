#include "bihom/multilinear_map.hpp"

namespace bihom {

MultilinearMap::MultilinearMap(int dim, int arity) : dim_(dim), arity_(arity) {
  if (dim < 1) throw BadParameter("multilinear map needs a positive dimension");
  if (arity < 2 || arity > 4) throw BadParameter("arity must be 2, 3 or 4");
}

std::uint64_t MultilinearMap::pack(std::span<const int> in) const {
  if (static_cast<int>(in.size()) != arity_)
    throw DimensionMismatch("wrong number of arguments for this arity");
  std::uint64_t key = 0;
  for (int i : in) {
    if (i < 0 || i >= dim_) throw DimensionMismatch("basis index out of range");
    key = (key << 8) | static_cast<std::uint64_t>(i);
  }
  return key;
}

std::vector<int> MultilinearMap::unpack(std::uint64_t key) const {
  std::vector<int> in(static_cast<std::size_t>(arity_));
  for (int t = arity_ - 1; t >= 0; --t) {
    in[static_cast<std::size_t>(t)] = static_cast<int>(key & 0xff);
    key >>= 8;
  }
  return in;
}

MultilinearMap MultilinearMap::from_basis_fn(
    int dim, int arity, const std::function<Vec(const std::vector<int>&)>& fn) {
  MultilinearMap m(dim, arity);
  std::vector<int> idx(static_cast<std::size_t>(arity), 0);
  do {
    Vec v = fn(idx);
    if (v.dim() != dim) throw DimensionMismatch("basis image has wrong dimension");
    if (!v.is_zero()) m.entries_[m.pack(idx)] = std::move(v);
  } while (next_tuple(idx, dim));
  return m;
}

void MultilinearMap::add_term(std::span<const int> in, int out, const Rational& value) {
  if (out < 0 || out >= dim_) throw DimensionMismatch("output index out of range");
  if (value.is_zero()) return;
  const std::uint64_t key = pack(in);
  auto it = entries_.find(key);
  if (it == entries_.end()) it = entries_.emplace(key, Vec(dim_)).first;
  it->second[out] += value;
  if (it->second.is_zero()) entries_.erase(it);
}

const Vec* MultilinearMap::basis_image(std::span<const int> in) const {
  auto it = entries_.find(pack(in));
  return it == entries_.end() ? nullptr : &it->second;
}

Vec MultilinearMap::eval(std::span<const Vec> args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw DimensionMismatch("wrong number of arguments for this arity");
  for (const Vec& a : args)
    if (a.dim() != dim_) throw DimensionMismatch("argument dimension mismatch");

  std::vector<std::vector<int>> supports;
  supports.reserve(args.size());
  for (const Vec& a : args) supports.push_back(a.support());

  Vec out(dim_);
  std::vector<std::size_t> pos(static_cast<std::size_t>(arity_), 0);
  for (const auto& s : supports)
    if (s.empty()) return out;

  std::vector<int> tuple(static_cast<std::size_t>(arity_));
  for (;;) {
    Rational coeff(1);
    for (int t = 0; t < arity_; ++t) {
      tuple[static_cast<std::size_t>(t)] = supports[static_cast<std::size_t>(t)][pos[static_cast<std::size_t>(t)]];
      coeff *= args[static_cast<std::size_t>(t)][tuple[static_cast<std::size_t>(t)]];
    }
    if (const Vec* img = basis_image(tuple)) out.add_scaled(coeff, *img);

    int t = arity_ - 1;
    for (; t >= 0; --t) {
      if (++pos[static_cast<std::size_t>(t)] < supports[static_cast<std::size_t>(t)].size()) break;
      pos[static_cast<std::size_t>(t)] = 0;
    }
    if (t < 0) break;
  }
  return out;
}

}  // namespace bihom
