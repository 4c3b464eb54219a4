#pragma once

#include <array>
#include <string_view>

namespace tileguard {

// Small self-contained Java programs used as originals when synthesizing
// plagiarism-structured corpora. Introductory-programming flavor on purpose:
// sorting, aggregation, sieves, matrix work.
struct seed_program {
    std::string_view name;  // file stem
    std::string_view source;
};

inline constexpr std::array<seed_program, 4> seed_programs = {{
    {"stats", R"java(
import java.util.Scanner;

public class Stats {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int[] values = new int[n];
        for (int i = 0; i < n; i++) {
            values[i] = in.nextInt();
        }
        for (int i = 0; i < n - 1; i++) {
            for (int j = 0; j < n - 1 - i; j++) {
                if (values[j] > values[j + 1]) {
                    int tmp = values[j];
                    values[j] = values[j + 1];
                    values[j + 1] = tmp;
                }
            }
        }
        long sum = 0;
        for (int i = 0; i < n; i++) {
            sum += values[i];
        }
        double mean = (double) sum / n;
        double median;
        if (n % 2 == 1) {
            median = values[n / 2];
        } else {
            median = (values[n / 2 - 1] + values[n / 2]) / 2.0;
        }
        System.out.println("mean = " + mean);
        System.out.println("median = " + median);
        System.out.println("min = " + values[0] + " max = " + values[n - 1]);
    }
}
)java"},
    {"account", R"java(
public class Account {
    private String owner;
    private double balance;
    private int transactions;

    public Account(String owner, double opening) {
        this.owner = owner;
        this.balance = opening;
        this.transactions = 0;
    }

    public void deposit(double amount) {
        if (amount <= 0.0) {
            throw new IllegalArgumentException("deposit must be positive");
        }
        balance += amount;
        transactions++;
    }

    public boolean withdraw(double amount) {
        if (amount <= 0.0 || amount > balance) {
            return false;
        }
        balance -= amount;
        transactions++;
        return true;
    }

    public String describe() {
        return owner + ": " + balance + " after " + transactions + " ops";
    }

    public static void main(String[] args) {
        Account acct = new Account("alice", 100.0);
        acct.deposit(50.5);
        if (!acct.withdraw(30.0)) {
            System.out.println("withdrawal rejected");
        }
        acct.deposit(12.25);
        System.out.println(acct.describe());
    }
}
)java"},
    {"primes", R"java(
public class Primes {
    public static void main(String[] args) {
        int limit = 200;
        boolean[] composite = new boolean[limit + 1];
        int p = 2;
        while (p * p <= limit) {
            if (!composite[p]) {
                int multiple = p * p;
                while (multiple <= limit) {
                    composite[multiple] = true;
                    multiple += p;
                }
            }
            p++;
        }
        int count = 0;
        StringBuilder line = new StringBuilder();
        for (int i = 2; i <= limit; i++) {
            if (!composite[i]) {
                count++;
                line.append(i);
                line.append(' ');
            }
        }
        System.out.println(line.toString().trim());
        System.out.println("found " + count + " primes up to " + limit);
    }
}
)java"},
    {"matrix", R"java(
public class Matrix {
    static double[][] multiply(double[][] a, double[][] b) {
        int n = a.length;
        int m = b[0].length;
        int k = b.length;
        double[][] out = new double[n][m];
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < m; j++) {
                double acc = 0.0;
                for (int t = 0; t < k; t++) {
                    acc += a[i][t] * b[t][j];
                }
                out[i][j] = acc;
            }
        }
        return out;
    }

    public static void main(String[] args) {
        double[][] a = {{1.0, 2.0}, {3.0, 4.0}};
        double[][] b = {{5.0, 6.0}, {7.0, 8.0}};
        double[][] c = multiply(a, b);
        double trace = 0.0;
        for (int i = 0; i < c.length; i++) {
            trace += c[i][i];
        }
        for (int i = 0; i < c.length; i++) {
            StringBuilder row = new StringBuilder();
            for (int j = 0; j < c[i].length; j++) {
                row.append(c[i][j]);
                row.append('\t');
            }
            System.out.println(row.toString());
        }
        System.out.println("trace = " + trace);
    }
}
)java"},
}};

}  // namespace tileguard
