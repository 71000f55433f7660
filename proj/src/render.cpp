#include "unitfit/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace unitfit {

namespace {

Json number_or_null(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

std::string fixed_or_dash(const Json& v) {
    if (v.is_null()) return "-";
    return format_fixed(v.get<double>());
}

} // namespace

std::string format_fixed(double v) {
    if (std::isnan(v)) return "-";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json comparison_to_json(const ComparisonTable& table) {
    Json doc;
    doc["dataset"] = table.dataset;
    doc["n_obs"] = table.n_obs;
    doc["families"] = Json::array();
    for (const FamilyBlock& b : table.blocks) {
        Json fam;
        fam["family"] = std::string(family_name(b.family));
        if (b.failed()) {
            fam["failed"] = true;
            fam["error"] = b.failure;
            doc["families"].push_back(std::move(fam));
            continue;
        }
        const auto names = param_names(b.family);
        Json params, se, wz, wp, wlabel;
        for (size_t i = 0; i < names.size(); ++i) {
            params[names[i]] = b.fit.spec.params[i];
            se[names[i]] = number_or_null(b.fit.se[i]);
            wz[names[i]] = number_or_null(b.fit.wald_z[i]);
            wp[names[i]] = number_or_null(b.fit.wald_p[i]);
            wlabel[names[i]] = b.fit.wald_label[i];
        }
        fam["converged"] = b.fit.converged;
        fam["params"] = std::move(params);
        fam["log_lik"] = b.fit.log_lik;
        fam["n_obs"] = b.fit.n_obs;
        fam["vcov_ok"] = b.fit.vcov_ok;
        fam["vcov_scaled"] = Json::array();
        for (const auto& row : b.fit.vcov_scaled) {
            Json r = Json::array();
            for (double v : row) r.push_back(number_or_null(v));
            fam["vcov_scaled"].push_back(std::move(r));
        }
        fam["se"] = std::move(se);
        fam["determinant"] = number_or_null(b.fit.determinant);
        fam["wald_z"] = std::move(wz);
        fam["wald_p"] = std::move(wp);
        fam["wald_label"] = std::move(wlabel);
        fam["aic"] = b.criteria.aic;
        fam["caic"] = b.criteria.caic;
        fam["bic"] = b.criteria.bic;
        fam["hqic"] = b.criteria.hqic;
        fam["k"] = b.criteria.k;
        fam["ks"] = b.gof.ks;
        fam["ks_sup"] = b.gof.ks_sup;
        fam["ks_p"] = b.gof.ks_p;
        fam["h0_rejected"] = b.gof.h0_rejected;
        fam["ad"] = b.gof.ad;
        fam["cvm"] = b.gof.cvm;
        fam["ad_clamped"] = b.gof.ad_clamped;
        doc["families"].push_back(std::move(fam));
    }
    return doc;
}

Json describe_to_json(const Dataset& data, const DescriptiveStats& s) {
    Json doc;
    doc["dataset"] = data.name;
    doc["n_obs"] = data.n();
    doc["stats"] = {
        {"min", s.min},       {"mean", s.mean},         {"std", s.std_dev},
        {"skewness", number_or_null(s.skewness)},       {"kurtosis", number_or_null(s.kurtosis)},
        {"q25", s.q25},       {"q50", s.q50},           {"q75", s.q75},
        {"max", s.max},
    };
    return doc;
}

std::string comparison_markdown(const Json& doc) {
    const auto& families = doc["families"];

    // Parameters can differ per family; rows are laid out like the reference
    // tables with up to two parameter lines.
    std::ostringstream out;
    out << "# " << doc["dataset"].get<std::string>() << " (n=" << doc["n_obs"].get<int>() << ")\n\n";
    out << "| field |";
    for (const auto& f : families) out << " " << f["family"].get<std::string>() << " |";
    out << "\n|---|";
    for (size_t i = 0; i < families.size(); ++i) out << "---|";
    out << "\n";

    auto row = [&](const std::string& label, auto&& cell) {
        out << "| " << label << " |";
        for (const auto& f : families) {
            out << " " << (f.contains("failed") ? std::string("fit failed") : cell(f)) << " |";
        }
        out << "\n";
    };

    row("theta", [](const Json& f) {
        std::string s;
        for (auto it = f["params"].begin(); it != f["params"].end(); ++it) {
            if (!s.empty()) s += ", ";
            s += it.key() + "=" + format_fixed(it.value().get<double>());
        }
        return s;
    });
    row("var", [](const Json& f) {
        if (!f["vcov_ok"].get<bool>()) return std::string("-");
        const auto& m = f["vcov_scaled"];
        if (m.size() == 1) return fixed_or_dash(m[0][0]);
        std::string s;
        for (const auto& r : m) {
            if (!s.empty()) s += "; ";
            std::string rowtxt;
            for (const auto& v : r) {
                if (!rowtxt.empty()) rowtxt += ", ";
                rowtxt += fixed_or_dash(v);
            }
            s += rowtxt;
        }
        return "[" + s + "]";
    });
    row("se", [](const Json& f) {
        std::string s;
        for (auto it = f["se"].begin(); it != f["se"].end(); ++it) {
            if (!s.empty()) s += ", ";
            s += fixed_or_dash(it.value());
        }
        return s;
    });
    for (const char* key : {"aic", "caic", "bic", "hqic", "log_lik", "ks"}) {
        row(key == std::string("log_lik") ? "ll" : key,
            [key](const Json& f) { return fixed_or_dash(f[key]); });
    }
    row("h0", [](const Json& f) {
        return std::string(f["h0_rejected"].get<bool>() ? "reject" : "Fail to reject");
    });
    row("p_value", [](const Json& f) { return fixed_or_dash(f["ks_p"]); });
    row("ad", [](const Json& f) { return fixed_or_dash(f["ad"]); });
    row("cvm", [](const Json& f) { return fixed_or_dash(f["cvm"]); });
    row("determinant", [](const Json& f) {
        // one-parameter families carry a scalar var and no determinant cell
        if (f["params"].size() < 2) return std::string("-");
        return fixed_or_dash(f["determinant"]);
    });
    row("significant", [](const Json& f) {
        std::string s;
        for (auto it = f["wald_label"].begin(); it != f["wald_label"].end(); ++it) {
            if (!s.empty()) s += ", ";
            s += it.key() + ": " + it.value().get<std::string>();
        }
        return s;
    });
    row("converged", [](const Json& f) {
        return std::string(f["converged"].get<bool>() ? "yes" : "NOT CONVERGED");
    });
    return out.str();
}

std::string describe_markdown(const Json& doc) {
    static const char* cols[] = {"min", "mean", "std", "skewness", "kurtosis",
                                 "q25", "q50", "q75", "max"};
    std::ostringstream out;
    out << "| dataset | n |";
    for (const char* c : cols) out << " " << c << " |";
    out << "\n|---|---|";
    for (size_t i = 0; i < std::size(cols); ++i) out << "---|";
    out << "\n| " << doc["dataset"].get<std::string>() << " | " << doc["n_obs"].get<int>() << " |";
    for (const char* c : cols) out << " " << fixed_or_dash(doc["stats"][c]) << " |";
    out << "\n";
    return out.str();
}

namespace {

void csv_value(std::ostringstream& out, const std::string& dataset, const std::string& family,
               const std::string& field, const Json& v) {
    out << dataset << "," << family << "," << field << ",";
    if (v.is_null()) {
        out << "nan";
    } else if (v.is_boolean()) {
        out << (v.get<bool>() ? "true" : "false");
    } else if (v.is_number_integer()) {
        out << v.get<long long>();
    } else if (v.is_number()) {
        out << format_full(v.get<double>());
    } else {
        out << v.get<std::string>();
    }
    out << "\n";
}

} // namespace

std::string comparison_csv(const Json& doc) {
    std::ostringstream out;
    out << "dataset,family,field,value\n";
    const std::string ds = doc["dataset"].get<std::string>();
    for (const auto& f : doc["families"]) {
        const std::string fam = f["family"].get<std::string>();
        if (f.contains("failed")) {
            csv_value(out, ds, fam, "failed", f["error"]);
            continue;
        }
        for (auto it = f["params"].begin(); it != f["params"].end(); ++it) {
            csv_value(out, ds, fam, "param_" + it.key(), it.value());
        }
        for (auto it = f["se"].begin(); it != f["se"].end(); ++it) {
            csv_value(out, ds, fam, "se_" + it.key(), it.value());
        }
        const auto& m = f["vcov_scaled"];
        for (size_t i = 0; i < m.size(); ++i) {
            for (size_t j = 0; j < m[i].size(); ++j) {
                csv_value(out, ds, fam, "vcov_" + std::to_string(i) + "_" + std::to_string(j),
                          m[i][j]);
            }
        }
        for (const char* key : {"log_lik", "determinant", "aic", "caic", "bic", "hqic", "ks",
                                "ks_sup", "ks_p", "ad", "cvm"}) {
            csv_value(out, ds, fam, key, f[key]);
        }
        for (auto it = f["wald_z"].begin(); it != f["wald_z"].end(); ++it) {
            csv_value(out, ds, fam, "wald_z_" + it.key(), it.value());
        }
        for (auto it = f["wald_p"].begin(); it != f["wald_p"].end(); ++it) {
            csv_value(out, ds, fam, "wald_p_" + it.key(), it.value());
        }
        csv_value(out, ds, fam, "h0_rejected", f["h0_rejected"]);
        csv_value(out, ds, fam, "converged", f["converged"]);
    }
    return out.str();
}

std::string describe_csv(const Json& doc) {
    std::ostringstream out;
    out << "dataset,field,value\n";
    const std::string ds = doc["dataset"].get<std::string>();
    out << ds << ",n," << doc["n_obs"].get<int>() << "\n";
    for (auto it = doc["stats"].begin(); it != doc["stats"].end(); ++it) {
        out << ds << "," << it.key() << ","
            << (it.value().is_null() ? std::string("nan") : format_full(it.value().get<double>()))
            << "\n";
    }
    return out.str();
}

std::string plot_csv(const PlotSeries& plot) {
    std::ostringstream out;
    if (!plot.bins.empty()) {
        out << "series,lo,hi,density\n";
        for (const auto& b : plot.bins) {
            out << "histogram," << format_full(b.lo) << "," << format_full(b.hi) << ","
                << format_full(b.density) << "\n";
        }
    }
    out << "series,x,y\n";
    for (const auto& s : plot.series) {
        for (const auto& [x, y] : s.points) {
            out << s.label << "," << format_full(x) << "," << format_full(y) << "\n";
        }
    }
    return out.str();
}

namespace {

constexpr int kW = 720, kH = 540, kMargin = 56;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Scale {
    double x0, x1, y0, y1;
    double sx(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kW - 2 * kMargin); }
    double sy(double y) const { return kH - kMargin - (y - y0) / (y1 - y0) * (kH - 2 * kMargin); }
};

std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

std::string plot_svg(const PlotSeries& plot, const std::string& title) {
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
    for (const auto& s : plot.series) {
        for (const auto& [x, y] : s.points) {
            x0 = std::min(x0, x); x1 = std::max(x1, x);
            y0 = std::min(y0, y); y1 = std::max(y1, y);
        }
    }
    for (const auto& b : plot.bins) y1 = std::max(y1, b.density);
    if (!(x1 > x0)) x1 = x0 + 1.0;
    if (!(y1 > y0)) y1 = y0 + 1.0;
    const Scale sc{x0, x1, y0, y1};

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kW
        << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n"
        << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n"
        << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"15\">" << title << "</text>\n";

    // axes
    out << "<line x1=\"" << kMargin << "\" y1=\"" << kH - kMargin << "\" x2=\"" << kW - kMargin
        << "\" y2=\"" << kH - kMargin << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
        << kH - kMargin << "\" stroke=\"black\"/>\n";

    for (const auto& b : plot.bins) {
        const double x = sc.sx(b.lo), w = sc.sx(b.hi) - x;
        const double y = sc.sy(b.density), h = sc.sy(0.0) - y;
        out << "<rect x=\"" << svg_num(x) << "\" y=\"" << svg_num(y) << "\" width=\"" << svg_num(w)
            << "\" height=\"" << svg_num(h)
            << "\" fill=\"#c6dbef\" stroke=\"#6baed6\" stroke-width=\"1\"/>\n";
    }

    if (plot.kind == PlotKind::pp || plot.kind == PlotKind::qq) {
        const double lo = std::max(x0, y0), hi = std::min(x1, y1);
        out << "<line x1=\"" << svg_num(sc.sx(lo)) << "\" y1=\"" << svg_num(sc.sy(lo)) << "\" x2=\""
            << svg_num(sc.sx(hi)) << "\" y2=\"" << svg_num(sc.sy(hi))
            << "\" stroke=\"#888888\" stroke-dasharray=\"5,4\"/>\n";
    }

    int color = 0;
    int legend_y = kMargin;
    const bool point_plot = plot.kind == PlotKind::pp || plot.kind == PlotKind::qq;
    for (const auto& s : plot.series) {
        const char* stroke = kPalette[color % std::size(kPalette)];
        ++color;
        out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
        if (s.label == "ecdf") {
            // draw the staircase: horizontal run to each sample point, then the riser
            double prev = 0.0;
            for (const auto& [x, y] : s.points) {
                out << svg_num(sc.sx(x)) << "," << svg_num(sc.sy(prev)) << " "
                    << svg_num(sc.sx(x)) << "," << svg_num(sc.sy(y)) << " ";
                prev = y;
            }
        } else {
            for (const auto& [x, y] : s.points) {
                out << svg_num(sc.sx(x)) << "," << svg_num(sc.sy(y)) << " ";
            }
        }
        out << "\"/>\n";
        if (point_plot) {
            for (const auto& [x, y] : s.points) {
                out << "<circle cx=\"" << svg_num(sc.sx(x)) << "\" cy=\"" << svg_num(sc.sy(y))
                    << "\" r=\"2.5\" fill=\"" << stroke << "\"/>\n";
            }
        }
        out << "<text x=\"" << kW - kMargin - 150 << "\" y=\"" << legend_y
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << stroke << "\">"
            << s.label << "</text>\n";
        legend_y += 16;
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace unitfit
