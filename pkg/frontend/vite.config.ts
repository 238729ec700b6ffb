import { defineConfig } from "vitest/config";

export default defineConfig({
  server: {
    proxy: {
      // Point the dev server at a running engine service.
      "/api": "http://127.0.0.1:8437",
    },
  },
  test: {
    environment: "happy-dom",
    include: ["tests/**/*.test.ts"],
  },
});
