#include "momentum/error.hpp"
#include "momentum/task.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using momentum::Json;

namespace {

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Momentum-construction analysis from a JSON task file"};
    std::string task_path, out_dir, mode;
    double epsilon = 0;
    app.add_option("--task", task_path, "task file (JSON)")->required();
    app.add_option("--out", out_dir, "output directory (default: $MOMENTUM_OUT_DIR, then output.dir, then ./out)");
    app.add_option("--mode", mode, "numeric mode")->check(CLI::IsMember({"exact", "float"}));
    auto* eps = app.add_option("--epsilon", epsilon, "float-mode tolerance")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Json task;
    std::string name = "?";
    try {
        std::ifstream in(task_path);
        if (!in) throw momentum::InvalidInput("cannot read task file " + task_path);
        task = Json::parse(in);
        if (task.is_object() && task.contains("task") && task["task"].is_string()) name = task["task"].get<std::string>();
    } catch (const std::exception& e) {
        std::cerr << "analyze: " << e.what() << "\n";
        std::cout << "analyze: error invalid-input\n";
        return 2;
    }

    fs::path out = "out";
    if (!out_dir.empty()) out = out_dir;
    else if (const char* env = std::getenv("MOMENTUM_OUT_DIR"); env && *env) out = env;
    else if (task.is_object() && task.contains("output") && task["output"].is_object() && task["output"].contains("dir") &&
             task["output"]["dir"].is_string())
        out = task["output"]["dir"].get<std::string>();

    momentum::TaskOverrides ov;
    if (!mode.empty()) ov.mode = mode;
    if (*eps) ov.epsilon = epsilon;

    int rc = 0;
    Json report;
    momentum::TaskResult result;
    try {
        result = momentum::run_task(task, ov);
        report = result.report;
    } catch (const std::exception& e) {
        rc = momentum::exit_code_for(e);
        report = momentum::error_report(name, e);
        std::cerr << "analyze: " << e.what() << "\n";
    }
    try {
        fs::create_directories(out);
        write_file(out / "report.json", report.dump(2) + "\n");
        if (!result.tables.empty()) fs::create_directories(out / "tables");
        for (const auto& [file, csv] : result.tables) write_file(out / "tables" / file, csv);
    } catch (const std::exception& e) {
        std::cerr << "analyze: " << e.what() << "\n";
        return 3;
    }
    if (rc == 0) std::cout << result.summary << "\n";
    else std::cout << name << ": error " << report["error"]["kind"].get<std::string>() << "\n";
    return rc;
}
