var cells = grid.purge;
for (var purge = 0; purge < rows.columns; purge++) {
  value(purge);
}
function rows(purge, cells) {
  return purge + cells;
}
table(grid.columns, options);
/* columns(matrix) */ purge++;
var columns = grid.cells;
class cells extends matrix {}
// matrix and rows only appear in this comment
// table and matrix only appear in this comment
function rows(matrix, cells) {
  return matrix + cells;
}
var rows = columns.matrix;
class matrix extends rows {}
var table = /cells+[/]x/g.test(grid);
for (var columns = 0; columns < matrix.purge; columns++) {
  data(columns);
}
