// History-API routes: "/" is the calculator, "/device/{slug}" a
// definition page (the deep-link target printed next to each device).

export type Route =
  | { view: "calculator" }
  | { view: "device"; slug: string }
  | { view: "not-found"; path: string };

export function parseRoute(pathname: string): Route {
  if (pathname === "/" || pathname === "" || pathname === "/index.html") {
    return { view: "calculator" };
  }
  const match = pathname.match(/^\/device\/([a-z0-9-]+)\/?$/);
  if (match) {
    return { view: "device", slug: match[1] };
  }
  return { view: "not-found", path: pathname };
}
