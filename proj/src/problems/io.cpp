#include "seqco/problems/io.hpp"

#include <fstream>

#include <json.hpp>

namespace seqco::problems {

namespace {

using nlohmann::json;

json points_to_json(const Points& pts) {
  json a = json::array();
  for (Index i = 0; i < pts.rows(); ++i) {
    a.push_back(pts(i, 0));
    a.push_back(pts(i, 1));
  }
  return a;
}

Points points_from_json(const json& a) {
  Points pts(a.size() / 2, 2);
  for (Index i = 0; i < pts.rows(); ++i) {
    pts(i, 0) = a[2 * i].get<double>();
    pts(i, 1) = a[2 * i + 1].get<double>();
  }
  return pts;
}

template <typename Vec>
json vector_to_json(const Vec& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Eigen::VectorXd vecd_from_json(const json& a) {
  Eigen::VectorXd v(a.size());
  for (Index i = 0; i < v.size(); ++i) v(i) = a[i].get<double>();
  return v;
}

Eigen::VectorXi veci_from_json(const json& a) {
  Eigen::VectorXi v(a.size());
  for (Index i = 0; i < v.size(); ++i) v(i) = a[i].get<int>();
  return v;
}

template <typename Mat>
json matrix_to_json(const Mat& m) {
  json a = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) a.push_back(m(i, j));
  }
  return a;
}

json depot_to_json(const Eigen::RowVector2d& p) {
  return json::array({p(0), p(1)});
}

Eigen::RowVector2d depot_from_json(const json& a) {
  Eigen::RowVector2d p;
  p(0) = a[0].get<double>();
  p(1) = a[1].get<double>();
  return p;
}

}  // namespace

std::string instance_to_json(const ProblemInstance& inst) {
  json payload;
  switch (inst.kind) {
    case ProblemKind::kTsp:
      payload["coords"] = points_to_json(inst.tsp().coords);
      break;
    case ProblemKind::kCvrp: {
      const auto& d = inst.cvrp();
      payload["depot"] = depot_to_json(d.depot);
      payload["coords"] = points_to_json(d.coords);
      payload["demands"] = vector_to_json(d.demands);
      payload["capacity"] = d.capacity;
      break;
    }
    case ProblemKind::kOp: {
      const auto& d = inst.op();
      payload["depot"] = depot_to_json(d.depot);
      payload["coords"] = points_to_json(d.coords);
      payload["prizes"] = vector_to_json(d.prizes);
      payload["length_limit"] = d.length_limit;
      break;
    }
    case ProblemKind::kPctsp: {
      const auto& d = inst.pctsp();
      payload["depot"] = depot_to_json(d.depot);
      payload["coords"] = points_to_json(d.coords);
      payload["prizes"] = vector_to_json(d.prizes);
      payload["penalties"] = vector_to_json(d.penalties);
      payload["min_prize"] = d.min_prize;
      break;
    }
    case ProblemKind::kSpctsp: {
      const auto& d = inst.spctsp();
      payload["depot"] = depot_to_json(d.depot);
      payload["coords"] = points_to_json(d.coords);
      payload["expected"] = vector_to_json(d.expected);
      payload["realized"] = vector_to_json(d.realized);
      payload["penalties"] = vector_to_json(d.penalties);
      payload["min_prize"] = d.min_prize;
      break;
    }
    case ProblemKind::kKnapsack: {
      const auto& d = inst.knapsack();
      payload["values"] = vector_to_json(d.values);
      payload["volumes"] = vector_to_json(d.volumes);
      payload["capacity"] = d.capacity;
      break;
    }
    case ProblemKind::kAtsp:
      payload["dist"] = matrix_to_json(inst.atsp().dist);
      break;
    case ProblemKind::kMis:
      payload["adjacency"] = matrix_to_json(inst.mis().adjacency);
      break;
  }
  json j;
  j["kind"] = kind_name(inst.kind);
  j["n"] = inst.n;
  j["seed"] = inst.seed;
  j["payload"] = std::move(payload);
  return j.dump();
}

ProblemInstance instance_from_json(const std::string& line) {
  json j = json::parse(line);
  ProblemInstance inst;
  inst.kind = kind_from_name(j.at("kind").get<std::string>());
  inst.n = j.at("n").get<int>();
  inst.seed = j.at("seed").get<std::int64_t>();
  const json& p = j.at("payload");
  const int n = inst.n;
  switch (inst.kind) {
    case ProblemKind::kTsp:
      inst.payload = TspData{points_from_json(p.at("coords"))};
      break;
    case ProblemKind::kCvrp: {
      CvrpData d;
      d.depot = depot_from_json(p.at("depot"));
      d.coords = points_from_json(p.at("coords"));
      d.demands = veci_from_json(p.at("demands"));
      d.capacity = p.at("capacity").get<int>();
      inst.payload = std::move(d);
      break;
    }
    case ProblemKind::kOp: {
      OpData d;
      d.depot = depot_from_json(p.at("depot"));
      d.coords = points_from_json(p.at("coords"));
      d.prizes = vecd_from_json(p.at("prizes"));
      d.length_limit = p.at("length_limit").get<double>();
      inst.payload = std::move(d);
      break;
    }
    case ProblemKind::kPctsp: {
      PctspData d;
      d.depot = depot_from_json(p.at("depot"));
      d.coords = points_from_json(p.at("coords"));
      d.prizes = vecd_from_json(p.at("prizes"));
      d.penalties = vecd_from_json(p.at("penalties"));
      d.min_prize = p.at("min_prize").get<double>();
      inst.payload = std::move(d);
      break;
    }
    case ProblemKind::kSpctsp: {
      SpctspData d;
      d.depot = depot_from_json(p.at("depot"));
      d.coords = points_from_json(p.at("coords"));
      d.expected = vecd_from_json(p.at("expected"));
      d.realized = vecd_from_json(p.at("realized"));
      d.penalties = vecd_from_json(p.at("penalties"));
      d.min_prize = p.at("min_prize").get<double>();
      inst.payload = std::move(d);
      break;
    }
    case ProblemKind::kKnapsack: {
      KnapsackData d;
      d.values = vecd_from_json(p.at("values"));
      d.volumes = vecd_from_json(p.at("volumes"));
      d.capacity = p.at("capacity").get<double>();
      inst.payload = std::move(d);
      break;
    }
    case ProblemKind::kAtsp: {
      AtspData d;
      const json& a = p.at("dist");
      d.dist.resize(n, n);
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) d.dist(i, k) = a[i * n + k].get<double>();
      }
      inst.payload = std::move(d);
      break;
    }
    case ProblemKind::kMis: {
      MisData d;
      const json& a = p.at("adjacency");
      d.adjacency.resize(n, n);
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) d.adjacency(i, k) = a[i * n + k].get<int>();
      }
      inst.payload = std::move(d);
      break;
    }
  }
  return inst;
}

void write_instances_jsonl(const std::string& path,
                           const std::vector<ProblemInstance>& instances) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::file, "cannot open for writing: " + path);
  for (const auto& inst : instances) out << instance_to_json(inst) << '\n';
}

std::vector<ProblemInstance> read_instances_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::file, "cannot open for reading: " + path);
  std::vector<ProblemInstance> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(instance_from_json(line));
  }
  return out;
}

}  // namespace seqco::problems
