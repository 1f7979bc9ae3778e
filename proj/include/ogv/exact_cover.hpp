// Dancing-links exact cover. Column choice is minimum remaining candidates
// with lowest-index ties; rows are explored in insertion order, so the
// enumeration order is deterministic.
#ifndef OGV_EXACT_COVER_HPP
#define OGV_EXACT_COVER_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace ogv {

class ExactCover {
public:
    explicit ExactCover(std::uint32_t num_cols) : ncols_(num_cols) {
        // node 0..ncols-1: column headers; node ncols: root
        const std::uint32_t root = num_cols;
        nodes_.resize(num_cols + 1);
        for (std::uint32_t c = 0; c <= num_cols; ++c) {
            nodes_[c].up = nodes_[c].down = c;
            nodes_[c].left = c == 0 ? root : c - 1;
            nodes_[c].right = c == num_cols ? 0 : c + 1;
            nodes_[c].col = c;
        }
        nodes_[root].left = num_cols == 0 ? root : num_cols - 1;
        nodes_[0].left = root;
        col_size_.assign(num_cols, 0);
    }

    std::uint32_t add_row(const std::vector<std::uint32_t>& cols) {
        const std::uint32_t row_id = static_cast<std::uint32_t>(row_first_.size());
        std::uint32_t first = 0;
        bool have_first = false;
        for (std::uint32_t c : cols) {
            const std::uint32_t id = static_cast<std::uint32_t>(nodes_.size());
            Node nd;
            nd.col = c;
            nd.row = row_id;
            nd.up = nodes_[c].up;
            nd.down = c;
            nodes_[nodes_[c].up].down = id;
            nodes_[c].up = id;
            if (!have_first) {
                nd.left = nd.right = id;
                first = id;
                have_first = true;
            } else {
                nd.left = nodes_[first].left;
                nd.right = first;
                nodes_[nodes_[first].left].right = id;
                nodes_[first].left = id;
            }
            nodes_.push_back(nd);
            ++col_size_[c];
        }
        row_first_.push_back(first);
        return row_id;
    }

    // Calls on_solution with the chosen row ids (in choice order); return
    // false from the callback to stop the enumeration.
    void solve(const std::function<bool(const std::vector<std::uint32_t>&)>& on_solution) {
        stack_.clear();
        stop_ = false;
        search(on_solution);
    }

private:
    struct Node {
        std::uint32_t left = 0, right = 0, up = 0, down = 0;
        std::uint32_t col = 0, row = 0;
    };
    std::uint32_t ncols_;
    std::vector<Node> nodes_;
    std::vector<std::uint32_t> col_size_;
    std::vector<std::uint32_t> row_first_;
    std::vector<std::uint32_t> stack_;
    bool stop_ = false;

    std::uint32_t root() const { return ncols_; }

    void cover(std::uint32_t c) {
        nodes_[nodes_[c].right].left = nodes_[c].left;
        nodes_[nodes_[c].left].right = nodes_[c].right;
        for (std::uint32_t i = nodes_[c].down; i != c; i = nodes_[i].down)
            for (std::uint32_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
                nodes_[nodes_[j].down].up = nodes_[j].up;
                nodes_[nodes_[j].up].down = nodes_[j].down;
                --col_size_[nodes_[j].col];
            }
    }
    void uncover(std::uint32_t c) {
        for (std::uint32_t i = nodes_[c].up; i != c; i = nodes_[i].up)
            for (std::uint32_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
                ++col_size_[nodes_[j].col];
                nodes_[nodes_[j].down].up = j;
                nodes_[nodes_[j].up].down = j;
            }
        nodes_[nodes_[c].right].left = c;
        nodes_[nodes_[c].left].right = c;
    }

    void search(const std::function<bool(const std::vector<std::uint32_t>&)>& cb) {
        if (stop_) return;
        if (nodes_[root()].right == root()) {
            if (!cb(stack_)) stop_ = true;
            return;
        }
        std::uint32_t best = nodes_[root()].right;
        for (std::uint32_t c = nodes_[best].right; c != root(); c = nodes_[c].right)
            if (col_size_[c] < col_size_[best]) best = c;
        if (col_size_[best] == 0) return;
        cover(best);
        for (std::uint32_t i = nodes_[best].down; i != best && !stop_; i = nodes_[i].down) {
            stack_.push_back(nodes_[i].row);
            for (std::uint32_t j = nodes_[i].right; j != i; j = nodes_[j].right) cover(nodes_[j].col);
            search(cb);
            for (std::uint32_t j = nodes_[i].left; j != i; j = nodes_[j].left) uncover(nodes_[j].col);
            stack_.pop_back();
        }
        uncover(best);
    }
};

}  // namespace ogv

#endif  // OGV_EXACT_COVER_HPP
