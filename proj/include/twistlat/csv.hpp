// csv.hpp — Deterministic CSV artifact writers. Numbers are printed with a
// fixed significant-digit count so identical runs produce identical bytes.

#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "twistlat/emission.hpp"
#include "twistlat/geometry.hpp"
#include "twistlat/model.hpp"
#include "twistlat/spectrum.hpp"

namespace twistlat {

inline std::string format_sig(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path, int digits = 9) : out_(path), digits_(digits) {
        if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
    }

    void header(const std::string& line) { out_ << line << "\n"; }

    CsvWriter& field(double v) {
        sep();
        out_ << format_sig(v, digits_);
        return *this;
    }
    CsvWriter& field(long long v) {
        sep();
        out_ << v;
        return *this;
    }
    CsvWriter& field(int v) { return field(static_cast<long long>(v)); }
    CsvWriter& field(const std::string& v) {
        sep();
        out_ << v;
        return *this;
    }
    void endrow() {
        out_ << "\n";
        first_ = true;
    }

  private:
    void sep() {
        if (!first_) out_ << ",";
        first_ = false;
    }
    std::ofstream out_;
    int digits_;
    bool first_{true};
};

// layer,basis_index,x,y,frac1,frac2 at 12 significant digits
inline void write_cell_csv(const std::string& path, const MoireCell& cell) {
    CsvWriter w(path, 12);
    w.header("layer,basis_index,x,y,frac1,frac2");
    for (const Site& s : cell.sites) {
        w.field(std::string(s.layer == Layer::a ? "a" : "b"))
            .field(s.basis_index)
            .field(s.position.x())
            .field(s.position.y())
            .field(s.frac.x())
            .field(s.frac.y());
        w.endrow();
    }
}

// i,j,shift1,shift2,amplitude_over_J
inline void write_bonds_csv(const std::string& path, const BondTable& table, double j_unit) {
    CsvWriter w(path);
    w.header("i,j,shift1,shift2,amplitude_over_J");
    for (const Bond& b : table.bonds) {
        w.field(b.i).field(b.j).field(b.shift[0]).field(b.shift[1]).field(b.amplitude / j_unit);
        w.endrow();
    }
}

// s,kx,ky,band_1..band_NM with energies in units of J
inline void write_bands_csv(const std::string& path, const BandStructure& bs, double j_unit) {
    CsvWriter w(path);
    std::string head = "s,kx,ky";
    for (int b = 0; b < bs.omega.cols(); ++b) head += ",band_" + std::to_string(b + 1);
    w.header(head);
    for (std::size_t i = 0; i < bs.s.size(); ++i) {
        w.field(bs.s[i]).field(bs.k[i].x()).field(bs.k[i].y());
        for (int b = 0; b < bs.omega.cols(); ++b) w.field(bs.omega(i, b) / j_unit);
        w.endrow();
    }
}

// omega_over_J,count,density
inline void write_dos_csv(const std::string& path, const DOSResult& dos, double j_unit) {
    CsvWriter w(path);
    w.header("omega_over_J,count,density");
    for (std::size_t b = 0; b < dos.counts.size(); ++b) {
        w.field(dos.bin_centers[b] / j_unit)
            .field(static_cast<long long>(dos.counts[b]))
            .field(dos.normalized_density[b] * j_unit);
        w.endrow();
    }
}

// x,y,V_a,V_b on a square grid, potentials in units of V_D
struct PotentialMapRow {
    double x, y, v_a, v_b;
};

inline void write_potential_csv(const std::string& path,
                                const std::vector<PotentialMapRow>& rows) {
    CsvWriter w(path);
    w.header("x,y,V_a,V_b");
    for (const auto& r : rows) {
        w.field(r.x).field(r.y).field(r.v_a).field(r.v_b);
        w.endrow();
    }
}

// tJ,re_Ce,im_Ce,pop
inline void write_emit_csv(const std::string& path, const EmissionResult& res, double j_unit) {
    CsvWriter w(path);
    w.header("tJ,re_Ce,im_Ce,pop");
    for (std::size_t i = 0; i < res.times.size(); ++i) {
        w.field(res.times[i] * j_unit)
            .field(res.emitter_amplitude[i].real())
            .field(res.emitter_amplitude[i].imag())
            .field(std::norm(res.emitter_amplitude[i]));
        w.endrow();
    }
}

// x,y,layer,prob over all lattice sites
inline void write_snapshot_csv(const std::string& path, const TiledLattice& lattice,
                               const std::vector<double>& prob) {
    CsvWriter w(path);
    w.header("x,y,layer,prob");
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const Site& s = lattice.cell.sites[lattice.site_in_cell(i)];
        const Vec2 p = lattice.position(i);
        w.field(p.x()).field(p.y()).field(std::string(s.layer == Layer::a ? "a" : "b"));
        w.field(prob[i]);
        w.endrow();
    }
}

// i,j,dx,dy,Jij_over_J,gammaij_over_J
inline void write_couplings_csv(const std::string& path, const CouplingMatrix& cm,
                                const MoireCell& cell, double j_unit) {
    CsvWriter w(path);
    w.header("i,j,dx,dy,Jij_over_J,gammaij_over_J");
    for (int a = 0; a < cm.j.rows(); ++a) {
        for (int b = a; b < cm.j.cols(); ++b) {
            const Vec2 dc = double(cm.positions[b].cell[0] - cm.positions[a].cell[0]) * cell.T1 +
                            double(cm.positions[b].cell[1] - cm.positions[a].cell[1]) * cell.T2 +
                            cell.sites[cm.positions[b].site].position -
                            cell.sites[cm.positions[a].site].position;
            w.field(a).field(b).field(dc.x()).field(dc.y());
            w.field(cm.j(a, b) / j_unit).field(cm.gamma(a, b) / j_unit);
            w.endrow();
        }
    }
}

// m,n,theta_rad,theta_deg
inline void write_angles_csv(const std::string& path,
                             const std::vector<CommensurateAngle>& angles) {
    CsvWriter w(path);
    w.header("m,n,theta_rad,theta_deg");
    for (const auto& a : angles) {
        w.field(a.m).field(a.n).field(a.theta).field(a.degrees());
        w.endrow();
    }
}

} // namespace twistlat
