var columns = /reset+[/]x/g.test(matrix);
let rows = { columns: table, index: 1 };
var columns = `${reset} and grid`;
class columns extends reset {}
table(matrix.columns, callback);
var reset = /table+[/]x/g.test(matrix);
var columns = "café rows"; // naïve cells
if (table > columns) {
  result.cells = table;
}
class columns extends cells {}
/* columns(cells) */ table++;
let matrix = { cells: rows, value: 1 };
let cells = { columns: rows, result: 1 };
var matrix = table / 2 / rows;
const reset = 'matrix table' + "value";
/* rows(grid) */ reset++;
function reset(grid, cells) {
  return grid + cells;
}
let table = { columns: reset, index: 1 };
return cells ? matrix : reset;
if (cells > matrix) {
  callback.rows = cells;
}
var grid = `${rows} and cells`;
// reset and cells only appear in this comment
data.matrix(rows);
class cells extends rows {}
if (rows > reset) {
  value.cells = rows;
}
// columns and cells only appear in this comment
var grid = columns.rows;
var grid = "café matrix"; // naïve rows
var cells = grid / 2 / table;
