#ifndef SGT_PARTIAL_MAP_HPP
#define SGT_PARTIAL_MAP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgt {

/// Partial map on the point set {0, ..., degree-1}; maps act on the right,
/// so (x)(ab) = ((x)a)b and the product ab means "a then b".
class PartialMap {
public:
    static constexpr int undefined = -1;

    PartialMap() = default;
    explicit PartialMap(int degree) : image_(degree, undefined) {}
    explicit PartialMap(std::vector<int> image) : image_(std::move(image)) {
        for (int v : image_)
            if (v < undefined || v >= degree())
                throw std::invalid_argument("image point out of range");
    }

    int degree() const { return static_cast<int>(image_.size()); }

    int apply(int x) const { return image_[x]; }
    void set(int x, int y) { image_[x] = y; }

    bool defined_at(int x) const { return image_[x] != undefined; }

    std::vector<int> domain() const {
        std::vector<int> d;
        for (int x = 0; x < degree(); ++x)
            if (defined_at(x)) d.push_back(x);
        return d;
    }

    std::vector<int> image() const {
        std::vector<bool> hit(degree(), false);
        for (int x = 0; x < degree(); ++x)
            if (defined_at(x)) hit[apply(x)] = true;
        std::vector<int> im;
        for (int y = 0; y < degree(); ++y)
            if (hit[y]) im.push_back(y);
        return im;
    }

    int rank() const {
        int r = 0;
        for (int x = 0; x < degree(); ++x)
            if (defined_at(x)) ++r;
        return r;
    }

    bool is_total() const { return rank() == degree(); }

    bool is_injective() const {
        std::vector<bool> hit(degree(), false);
        for (int x = 0; x < degree(); ++x) {
            if (!defined_at(x)) continue;
            if (hit[apply(x)]) return false;
            hit[apply(x)] = true;
        }
        return true;
    }

    /// Composition "this then g".
    PartialMap then(const PartialMap& g) const {
        PartialMap out(degree());
        for (int x = 0; x < degree(); ++x)
            if (defined_at(x) && g.defined_at(apply(x))) out.set(x, g.apply(apply(x)));
        return out;
    }

    std::optional<PartialMap> inverse() const {
        if (!is_injective()) return std::nullopt;
        PartialMap out(degree());
        for (int x = 0; x < degree(); ++x)
            if (defined_at(x)) out.set(apply(x), x);
        return out;
    }

    /// Literal of the form "[1,-,0]": image of point k at position k,
    /// 0-based, '-' for undefined.
    std::string to_literal() const {
        std::string out = "[";
        for (int x = 0; x < degree(); ++x) {
            if (x) out += ',';
            out += defined_at(x) ? std::to_string(apply(x)) : std::string("-");
        }
        return out + "]";
    }

    static PartialMap from_literal(const std::string& text) {
        if (text.size() < 2 || text.front() != '[' || text.back() != ']')
            throw std::invalid_argument("map literal must be bracketed, e.g. \"[1,-,0]\"");
        std::vector<int> image;
        std::string body = text.substr(1, text.size() - 2);
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
            if (tok == "-") image.push_back(undefined);
            else if (!tok.empty()) image.push_back(std::stoi(tok));
            else throw std::invalid_argument("empty entry in map literal");
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return PartialMap(std::move(image));
    }

    friend bool operator==(const PartialMap&, const PartialMap&) = default;
    friend bool operator<(const PartialMap& a, const PartialMap& b) { return a.image_ < b.image_; }

private:
    std::vector<int> image_;
};

}  // namespace sgt

#endif  // SGT_PARTIAL_MAP_HPP
