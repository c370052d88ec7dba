#include "faircut/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace faircut {

namespace {

using nlohmann::json;

constexpr int format_version = 1;

json node_to_json_tree(const IsolationTree& tree) {
    // Children always sit at higher indices, so building slots in reverse
    // index order lets each internal node adopt already-built children.
    std::vector<json> slots(tree.nodes.size());
    for (std::size_t i = tree.nodes.size(); i-- > 0;) {
        const TreeNode& node = tree.nodes[i];
        if (node.is_terminal) {
            slots[i] = json{{"depth", node.depth_value}};
        } else {
            json obj;
            obj["columns"] = node.hyperplane.columns;
            obj["coeffs"] = node.hyperplane.coeffs;
            obj["means"] = node.hyperplane.means;
            obj["sdevs"] = node.hyperplane.sdevs;
            obj["threshold"] = node.hyperplane.threshold;
            obj["left"] = std::move(slots[node.left]);
            obj["right"] = std::move(slots[node.right]);
            slots[i] = std::move(obj);
        }
    }
    return std::move(slots[0]);
}

json config_to_json(const ForestConfig& config) {
    json obj;
    obj["trees"] = config.trees;
    obj["sample_size"] = config.sample_size;
    obj["replacement"] = config.sample_with_replacement;
    obj["ndim"] = config.ndim;
    obj["col_select"] = selector_name(config.col_select);
    obj["global_column_weights"] = config.global_column_weights;
    obj["criterion"] = criterion_name(config.criterion);
    obj["ntry"] = config.trials;
    obj["max_depth"] = config.termination.max_depth
                           ? json(*config.termination.max_depth)
                           : json(nullptr);
    obj["gain_threshold"] = config.termination.gain_threshold
                                ? json(*config.termination.gain_threshold)
                                : json(nullptr);
    obj["depth_formula"] = config.depth_formula
                               ? json(depth_formula_name(*config.depth_formula))
                               : json(nullptr);
    // threads is an execution setting, not part of the model: identical fits
    // must serialize identically no matter how many workers produced them.
    return obj;
}

ForestConfig config_from_json(const json& obj, std::uint64_t base_seed) {
    ForestConfig config;
    config.trees = obj.at("trees").get<std::size_t>();
    config.sample_size = obj.at("sample_size").get<std::size_t>();
    config.sample_with_replacement = obj.at("replacement").get<bool>();
    config.ndim = obj.at("ndim").get<std::size_t>();
    config.col_select = parse_selector(obj.at("col_select").get<std::string>());
    config.global_column_weights = obj.at("global_column_weights").get<bool>();
    config.criterion = parse_criterion(obj.at("criterion").get<std::string>());
    config.trials = obj.at("ntry").get<std::size_t>();
    if (!obj.at("max_depth").is_null()) {
        config.termination.max_depth = obj.at("max_depth").get<std::size_t>();
    }
    if (!obj.at("gain_threshold").is_null()) {
        config.termination.gain_threshold = obj.at("gain_threshold").get<double>();
    }
    if (!obj.at("depth_formula").is_null()) {
        config.depth_formula =
            parse_depth_formula(obj.at("depth_formula").get<std::string>());
    }
    config.base_seed = base_seed;
    return config;
}

void validate_hyperplane(const Hyperplane& plane) {
    const std::size_t p = plane.columns.size();
    if (p == 0 || plane.coeffs.size() != p || plane.means.size() != p ||
        plane.sdevs.size() != p) {
        throw DataError("model: malformed hyperplane arrays");
    }
    for (double s : plane.sdevs) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw DataError("model: hyperplane sdev must be positive");
        }
    }
    if (!std::isfinite(plane.threshold)) {
        throw DataError("model: non-finite threshold");
    }
}

IsolationTree tree_from_json(const json& tree_obj) {
    IsolationTree tree;
    tree.sample_size = tree_obj.at("sample_size").get<std::size_t>();

    struct Pending {
        const json* node;
        std::uint32_t parent;
        bool is_left;
    };
    constexpr std::uint32_t no_parent = 0xffffffffu;
    std::vector<Pending> stack;
    stack.push_back(Pending{&tree_obj.at("root"), no_parent, false});
    while (!stack.empty()) {
        const Pending p = stack.back();
        stack.pop_back();
        const auto index = static_cast<std::uint32_t>(tree.nodes.size());
        if (p.parent != no_parent) {
            auto& slot = p.is_left ? tree.nodes[p.parent].left : tree.nodes[p.parent].right;
            slot = index;
        }
        const json& obj = *p.node;
        TreeNode node;
        if (obj.contains("depth")) {
            node.is_terminal = true;
            node.depth_value = obj.at("depth").get<double>();
            if (!(node.depth_value >= 0.0) || !std::isfinite(node.depth_value)) {
                throw DataError("model: terminal depth must be finite and >= 0");
            }
            tree.nodes.push_back(std::move(node));
            continue;
        }
        node.is_terminal = false;
        node.hyperplane.columns = obj.at("columns").get<std::vector<std::size_t>>();
        node.hyperplane.coeffs = obj.at("coeffs").get<std::vector<double>>();
        node.hyperplane.means = obj.at("means").get<std::vector<double>>();
        node.hyperplane.sdevs = obj.at("sdevs").get<std::vector<double>>();
        node.hyperplane.threshold = obj.at("threshold").get<double>();
        validate_hyperplane(node.hyperplane);
        tree.nodes.push_back(std::move(node));
        // Left pushed last so it pops first, matching the builder's index
        // order (children above parents).
        stack.push_back(Pending{&obj.at("right"), index, false});
        stack.push_back(Pending{&obj.at("left"), index, true});
    }
    return tree;
}

}  // namespace

std::string model_to_json(const ForestModel& model) {
    json doc;
    doc["format_version"] = format_version;
    doc["generator_version"] = model.generator_version;
    doc["base_seed"] = model.config.base_seed;
    doc["q"] = model.q;
    doc["n_cols"] = model.n_cols;
    doc["config"] = config_to_json(model.config);
    json trees = json::array();
    for (const auto& tree : model.trees) {
        json tree_obj;
        tree_obj["sample_size"] = tree.sample_size;
        tree_obj["root"] = node_to_json_tree(tree);
        trees.push_back(std::move(tree_obj));
    }
    doc["trees"] = std::move(trees);
    return doc.dump();
}

ForestModel model_from_json(const std::string& text) {
    try {
        const json doc = json::parse(text);
        const int version = doc.at("format_version").get<int>();
        if (version != format_version) {
            throw DataError("model: unsupported format_version " +
                            std::to_string(version));
        }
        ForestModel model;
        model.generator_version = doc.at("generator_version").get<std::string>();
        const auto base_seed = doc.at("base_seed").get<std::uint64_t>();
        model.q = doc.at("q").get<double>();
        if (!(model.q > 0.0) || !std::isfinite(model.q)) {
            throw DataError("model: q must be positive");
        }
        model.n_cols = doc.at("n_cols").get<std::size_t>();
        model.config = config_from_json(doc.at("config"), base_seed);
        const json& trees = doc.at("trees");
        if (!trees.is_array() || trees.empty()) {
            throw DataError("model: needs at least one tree");
        }
        model.trees.reserve(trees.size());
        for (const auto& tree_obj : trees) {
            model.trees.push_back(tree_from_json(tree_obj));
        }
        return model;
    } catch (const json::exception& e) {
        throw DataError(std::string("model: invalid document: ") + e.what());
    } catch (const ConfigError& e) {
        throw DataError(std::string("model: invalid document: ") + e.what());
    }
}

void save_model(const ForestModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    const std::string text = model_to_json(model);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.put('\n');
    if (!out) throw IoError("failed while writing '" + path + "'");
}

ForestModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return model_from_json(buffer.str());
}

}  // namespace faircut
