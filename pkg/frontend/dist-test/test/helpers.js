/** Test plumbing: spawn the Python service, generate fixture files. */
import { execFileSync, spawn } from "node:child_process";
import { mkdtempSync, readFileSync, readdirSync } from "node:fs";
import { createServer } from "node:net";
import { tmpdir } from "node:os";
import { join } from "node:path";
export function freePort() {
    return new Promise((resolve, reject) => {
        const server = createServer();
        server.on("error", reject);
        server.listen(0, "127.0.0.1", () => {
            const address = server.address();
            if (address === null || typeof address === "string") {
                reject(new Error("no port assigned"));
                return;
            }
            server.close(() => resolve(address.port));
        });
    });
}
export async function startService(storeDir) {
    const dir = storeDir ?? mkdtempSync(join(tmpdir(), "resumekit-store-"));
    const port = await freePort();
    const child = spawn("python3", [
        "-m", "uvicorn", "--factory", "resumekit.service:create_app",
        "--host", "127.0.0.1", "--port", String(port), "--log-level", "error",
    ], { env: { ...process.env, RESUME_STORE_DIR: dir }, stdio: "ignore" });
    const baseUrl = `http://127.0.0.1:${port}`;
    for (let attempt = 0; attempt < 120; attempt++) {
        try {
            const response = await fetch(`${baseUrl}/api/config`);
            if (response.ok) {
                return { baseUrl, storeDir: dir, stop: () => child.kill() };
            }
        }
        catch {
            // not up yet
        }
        await new Promise((resolve) => setTimeout(resolve, 250));
    }
    child.kill();
    throw new Error("service did not come up");
}
export function generateFixtures(seed, count, kind = "linkedin") {
    const dir = mkdtempSync(join(tmpdir(), "resumekit-fixtures-"));
    execFileSync("python3", [
        "-m", "resumekit.cli", "gen-fixtures",
        "--seed", String(seed), "--count", String(count),
        "--out", dir, "--kind", kind,
    ]);
    return readdirSync(dir)
        .filter((name) => name.endsWith(".xml"))
        .sort()
        .map((name) => ({
        name,
        data: new Blob([readFileSync(join(dir, name))], { type: "application/xml" }),
    }));
}
